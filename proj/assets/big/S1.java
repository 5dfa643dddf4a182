class S1 extends Abstract13 {
  void enter() {
    if (x0 > 0) {
      new S84();
      if (x6 > 0) {
        new S52();
        send("msg1");
        send("msg2");
        new S16();
      } else {
        new S64();
        send("msg8");
      }
    }
    switch (event) {
      case EV1:
        if (x9 > 0) {
          new S69();
          send("msg0");
        }
        try {
          new S63();
          new S8();
          try {
            new S14();
            send("msg10");
            new S1();
            new S3();
          } catch (IllegalStateException e) {
            send("msg8");
            new S21();
            log("note");
          }
          new S91();
        } catch (IllegalStateException e) {
          new S72();
        } finally {
          switch (event) {
            case EV2:
              send("msg1");
              new S23();
              new S83();
              break;
            case EV3:
              new S41();
              log("note");
              new S36();
              new S58();
              break;
            case EV4:
              new S76();
              new S74();
              new S77();
              new S61();
              break;
          }
          try {
            new S76();
            new S71();
          } catch (TimeoutException e) {
            new S21();
            new S47();
            send("msg14");
          } finally {
            send("msg0");
            log("note");
            send("msg13");
          }
        }
        break;
    }
  }
  void exit() {
    new S90();
  }
  public void handle() {
    log("note");
    switch (event) {
      case EV5:
        new S46();
        break;
    }
    switch (event) {
      case EV6:
        new S70();
        new S83();
        send("msg1");
        break;
    }
    switch (event) {
      case EV7:
        try {
          new State();
        } catch (IllegalStateException e) {
          try {
            new S57();
            new State();
            log("note");
            new S13();
          } catch (TimeoutException e) {
            send("msg9");
            log("note");
          } finally {
            new S11();
            send("msg10");
          }
          if (x3 > 0) {
            new Helper();
            send("msg14");
            send("msg16");
          } else {
            new S43();
          }
        } catch (IOException e) {
          send("msg11");
          send("msg9");
        }
        break;
    }
  }
  void tick() {
    send("msg17");
    send("msg8");
    if (x2 > 0) {
      send("msg13");
      new S32();
      log("note");
    } else {
      switch (event) {
        case EV8:
          new S21();
          new S53();
          new S78();
          break;
      }
      try {
        try {
          new S56();
          new S87();
        } catch (IOException e) {
          send("msg5");
          log("note");
        } catch (IllegalStateException e) {
          send("msg10");
        }
        new State();
        if (x6 > 0) {
          send("msg17");
        } else {
          new S49();
          new S6();
          new S12();
          new S81();
        }
      } catch (TimeoutException e) {
        new S67();
        send("msg12");
      } catch (IllegalStateException e) {
        new S53();
      }
      new S83();
    }
    log("note");
  }
  void reset() {
    new S72();
  }
  public void open() {
    send("msg4");
    switch (event) {
      case EV9:
        new S88();
        send("msg13");
        break;
    }
    new S68();
  }
  void close() {
    try {
      send("msg4");
      new State();
    } catch (IllegalStateException e) {
      log("note");
      switch (event) {
        case EV10:
          try {
            new S73();
          } catch (IOException e) {
            log("note");
            new S69();
            new S77();
            send("msg1");
          } catch (IOException e) {
            new S98();
          }
          try {
            send("msg11");
          } catch (IOException e) {
            send("msg18");
          } finally {
            send("msg0");
          }
          switch (event) {
            case EV11:
              send("msg1");
              send("msg18");
              log("note");
              new S91();
              break;
            case EV12:
              send("msg10");
              send("msg9");
              send("msg10");
              break;
          }
          break;
        case EV13:
          new S56();
          send("msg10");
          send("msg7");
          new S9();
          break;
        case EV14:
          new S18();
          switch (event) {
            case EV15:
              send("msg3");
              break;
            case EV16:
              send("msg18");
              new S99();
              new S86();
              send("msg5");
              break;
            case EV17:
              new S78();
              send("msg6");
              send("msg19");
              break;
          }
          switch (event) {
            case EV18:
              send("msg16");
              break;
            case EV19:
              send("msg6");
              new S99();
              log("note");
              new S47();
              break;
            case EV20:
              log("note");
              new S52();
              new S61();
              send("msg2");
              break;
          }
          break;
      }
      new S30();
      if (x6 > 0) {
        send("msg18");
      }
    }
  }
  public void start() {
    new S5();
    if (x0 > 0) {
      send("msg7");
    } else {
      if (x6 > 0) {
        new S36();
      }
      new S63();
      try {
        log("note");
        new S73();
        try {
          new S90();
          log("note");
        } catch (TimeoutException e) {
          new S27();
          new S13();
          new S25();
        }
        new S74();
      } catch (TimeoutException e) {
        send("msg13");
        send("msg10");
        switch (event) {
          case EV21:
            log("note");
            new S14();
            break;
          case EV22:
            new S15();
            new S50();
            break;
        }
        switch (event) {
          case EV23:
            log("note");
            new S18();
            send("msg4");
            send("msg6");
            break;
          case EV24:
            send("msg14");
            new S5();
            break;
        }
      }
      switch (event) {
        case EV25:
          if (x7 > 0) {
            new S82();
            new S97();
            new S5();
          }
          new S17();
          send("msg18");
          break;
        case EV26:
          new S8();
          try {
            new S3();
          } catch (TimeoutException e) {
            new S84();
            new S36();
          } finally {
            send("msg8");
            new State();
            new S72();
          }
          send("msg10");
          switch (event) {
            case EV27:
              send("msg13");
              new S6();
              log("note");
              new S66();
              break;
            case EV28:
              send("msg19");
              send("msg1");
              send("msg6");
              new S73();
              break;
          }
          break;
        case EV29:
          send("msg6");
          new S65();
          new S87();
          send("msg19");
          break;
      }
    }
  }
  void stop() {
    try {
      new S79();
      new S43();
    } catch (IllegalStateException e) {
      new S40();
      switch (event) {
        case EV30:
          try {
            send("msg7");
          } catch (IllegalStateException e) {
            send("msg16");
            new S80();
          }
          break;
        case EV31:
          new S44();
          new S62();
          break;
        case EV32:
          send("msg0");
          try {
            send("msg18");
            send("msg13");
            new S90();
            new S98();
          } catch (TimeoutException e) {
            log("note");
            new S90();
            new S80();
          }
          break;
      }
      switch (event) {
        case EV33:
          new S75();
          switch (event) {
            case EV34:
              send("msg7");
              send("msg0");
              new S47();
              break;
            case EV35:
              new S7();
              break;
          }
          break;
        case EV36:
          if (x7 > 0) {
            new S52();
            new S88();
          } else {
            new S42();
            send("msg4");
            send("msg2");
          }
          send("msg18");
          break;
      }
    }
    if (x5 > 0) {
      log("note");
      log("note");
    } else {
      send("msg15");
      send("msg13");
      log("note");
    }
    send("msg13");
    new S89();
  }
  void pause() {
    new S73();
    switch (event) {
      case EV37:
        new S19();
        new S90();
        try {
          new S42();
          send("msg7");
        } catch (TimeoutException e) {
          if (x6 > 0) {
            send("msg15");
            send("msg2");
            send("msg0");
            log("note");
          } else {
            send("msg7");
            new S22();
          }
        } finally {
          switch (event) {
            case EV38:
              log("note");
              new S64();
              break;
            case EV39:
              new Helper();
              send("msg7");
              new S7();
              send("msg10");
              break;
          }
          new S52();
          if (x2 > 0) {
            send("msg3");
          }
          switch (event) {
            case EV40:
              send("msg4");
              new S88();
              break;
            case EV41:
              new S32();
              send("msg4");
              break;
          }
        }
        break;
      case EV42:
        new State();
        send("msg19");
        new S53();
        new S7();
        break;
      case EV43:
        switch (event) {
          case EV44:
            send("msg15");
            switch (event) {
              case EV45:
                new S99();
                send("msg19");
                new S98();
                break;
              case EV46:
                new S44();
                break;
            }
            new S44();
            log("note");
            break;
          case EV47:
            new S96();
            send("msg7");
            break;
          case EV48:
            new S85();
            new S44();
            send("msg11");
            break;
        }
        switch (event) {
          case EV49:
            new S41();
            new S89();
            new S40();
            break;
          case EV50:
            send("msg19");
            send("msg17");
            send("msg7");
            log("note");
            break;
          case EV51:
            if (x0 > 0) {
              send("msg17");
              send("msg13");
              new S51();
            } else {
              new State();
              new S12();
              log("note");
              send("msg5");
            }
            switch (event) {
              case EV52:
                send("msg6");
                break;
            }
            break;
        }
        break;
    }
    send("msg17");
    new S87();
  }
}
