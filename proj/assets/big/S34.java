class S34 extends Abstract13 {
  public void enter() {
    new S62();
    send("msg6");
  }
  void exit() {
    send("msg7");
    send("msg12");
  }
  void handle() {
    new S29();
    switch (event) {
      case EV942:
        new Helper();
        break;
      case EV943:
        new S42();
        break;
      case EV944:
        new S65();
        send("msg19");
        switch (event) {
          case EV945:
            send("msg13");
            new S37();
            send("msg0");
            if (x5 > 0) {
              new S39();
              send("msg7");
            } else {
              new S9();
            }
            break;
          case EV946:
            send("msg7");
            switch (event) {
              case EV947:
                new S88();
                new Helper();
                new S83();
                new S5();
                break;
            }
            new S81();
            send("msg14");
            break;
          case EV948:
            new S70();
            send("msg12");
            send("msg17");
            switch (event) {
              case EV949:
                send("msg2");
                break;
              case EV950:
                new S70();
                send("msg7");
                break;
              case EV951:
                send("msg3");
                new Helper();
                new S23();
                break;
            }
            break;
        }
        break;
    }
  }
  void tick() {
    send("msg17");
  }
  public void reset() {
    new S33();
    new State();
  }
  void open() {
    new S88();
    log("note");
  }
  void close() {
    if (x0 > 0) {
      send("msg19");
      try {
        if (x3 > 0) {
          new S66();
          new S78();
          new S88();
          new S3();
        }
        new S56();
      } catch (IllegalStateException e) {
        send("msg10");
        new S17();
        new S24();
      } catch (IllegalStateException e) {
        log("note");
        if (x1 > 0) {
          new S31();
          send("msg7");
          send("msg8");
          new Helper();
        } else {
          new S52();
          new S85();
        }
      }
      log("note");
    } else {
      if (x0 > 0) {
        try {
          send("msg1");
          new S51();
          send("msg17");
        } catch (IOException e) {
          new S15();
        }
        if (x3 > 0) {
          send("msg6");
          send("msg6");
          new S64();
        } else {
          send("msg10");
          new Helper();
        }
      } else {
        new S18();
      }
      new S36();
    }
    send("msg12");
    try {
      new S43();
    } finally {
      log("note");
      send("msg1");
      send("msg9");
      switch (event) {
        case EV952:
          new S18();
          break;
        case EV953:
          new S67();
          try {
            send("msg14");
            new S60();
          } catch (IOException e) {
            new Helper();
          } catch (IllegalStateException e) {
            log("note");
            new Helper();
          }
          break;
        case EV954:
          new S58();
          new S79();
          new S53();
          if (x4 > 0) {
            new S94();
            log("note");
            send("msg16");
          } else {
            new S5();
            new S85();
          }
          break;
      }
    }
  }
  public void start() {
    try {
      if (x8 > 0) {
        send("msg13");
        send("msg1");
        switch (event) {
          case EV955:
            send("msg9");
            log("note");
            break;
        }
      }
      log("note");
      new S86();
      send("msg7");
    } catch (IOException e) {
      log("note");
      new S17();
      new S28();
    } finally {
      try {
        switch (event) {
          case EV956:
            new S25();
            send("msg12");
            break;
          case EV957:
            new S69();
            new S64();
            send("msg7");
            break;
        }
        if (x7 > 0) {
          new S6();
          send("msg17");
          send("msg19");
          send("msg19");
        }
        new S61();
      } catch (IOException e) {
        new S91();
      } catch (TimeoutException e) {
        send("msg12");
        send("msg12");
        new S36();
        new S24();
      }
      new S97();
      new S7();
      try {
        send("msg4");
      } catch (IOException e) {
        new S85();
        new S48();
      } finally {
        send("msg11");
        switch (event) {
          case EV958:
            new S95();
            log("note");
            break;
        }
        new S12();
        send("msg13");
      }
    }
  }
  void stop() {
    new S39();
    try {
      send("msg4");
      new S85();
      switch (event) {
        case EV959:
          log("note");
          send("msg5");
          new S69();
          break;
        case EV960:
          switch (event) {
            case EV961:
              log("note");
              new S14();
              new S56();
              break;
            case EV962:
              send("msg8");
              break;
            case EV963:
              new S25();
              send("msg5");
              break;
          }
          if (x4 > 0) {
            send("msg4");
          }
          switch (event) {
            case EV964:
              log("note");
              new S96();
              break;
            case EV965:
              new S55();
              send("msg16");
              send("msg3");
              break;
            case EV966:
              send("msg1");
              break;
          }
          break;
        case EV967:
          send("msg7");
          new S65();
          send("msg18");
          switch (event) {
            case EV968:
              new S61();
              new S76();
              new Helper();
              break;
          }
          break;
      }
    } catch (IOException e) {
      if (x6 > 0) {
        send("msg9");
        switch (event) {
          case EV969:
            new S57();
            new S5();
            break;
          case EV970:
            new S80();
            new S60();
            send("msg10");
            break;
          case EV971:
            send("msg6");
            new S11();
            break;
        }
        log("note");
        new S2();
      } else {
        try {
          send("msg7");
          new S99();
          send("msg1");
          send("msg4");
        } catch (IllegalStateException e) {
          new S47();
          new S76();
        } catch (IOException e) {
          send("msg15");
          new S73();
          new S57();
          new S89();
        }
        new S86();
        new S62();
        log("note");
      }
      new S34();
      if (x3 > 0) {
        send("msg14");
        new Helper();
        log("note");
        try {
          new S71();
        } finally {
          new S74();
          new S99();
        }
      } else {
        new S81();
      }
      new S21();
    } catch (IllegalStateException e) {
      switch (event) {
        case EV972:
          send("msg12");
          if (x6 > 0) {
            log("note");
            new S12();
            send("msg0");
          }
          break;
        case EV973:
          new S62();
          new S25();
          break;
      }
      new S28();
    }
  }
  void pause() {
    switch (event) {
      case EV974:
        switch (event) {
          case EV975:
            new S63();
            send("msg7");
            new S18();
            break;
          case EV976:
            new S67();
            try {
              new S78();
            } catch (IllegalStateException e) {
              send("msg18");
              new S98();
              new S52();
              log("note");
            }
            break;
        }
        break;
      case EV977:
        try {
          new State();
          new S94();
          try {
            new S85();
            send("msg0");
          } catch (TimeoutException e) {
            new S43();
            new S58();
            new S53();
            new S51();
          }
        } catch (IOException e) {
          new S89();
          try {
            new S87();
            new State();
          } catch (TimeoutException e) {
            new State();
            new S88();
          } finally {
            log("note");
            log("note");
            new S72();
          }
          send("msg13");
        }
        if (x6 > 0) {
          send("msg17");
        }
        break;
    }
    switch (event) {
      case EV978:
        send("msg14");
        send("msg15");
        new S58();
        break;
      case EV979:
        switch (event) {
          case EV980:
            if (x5 > 0) {
              new S73();
              send("msg0");
              new S60();
            } else {
              send("msg11");
              send("msg19");
              log("note");
            }
            new S15();
            break;
          case EV981:
            if (x5 > 0) {
              new S97();
              new S68();
            }
            break;
          case EV982:
            if (x2 > 0) {
              send("msg17");
            } else {
              new State();
              send("msg4");
            }
            switch (event) {
              case EV983:
                send("msg7");
                new Helper();
                new S71();
                log("note");
                break;
            }
            send("msg0");
            new S54();
            break;
        }
        send("msg1");
        break;
      case EV984:
        new S48();
        try {
          if (x1 > 0) {
            log("note");
            new S3();
          } else {
            log("note");
            new State();
            send("msg14");
          }
        } finally {
          new S33();
        }
        if (x9 > 0) {
          try {
            new S51();
          } catch (IOException e) {
            new S45();
            new S50();
          } catch (TimeoutException e) {
            new S73();
            new S20();
          }
          new S30();
        } else {
          new S55();
          try {
            new S23();
          } catch (IllegalStateException e) {
            send("msg11");
            send("msg7");
            new S51();
          }
        }
        break;
    }
    new S60();
  }
}
