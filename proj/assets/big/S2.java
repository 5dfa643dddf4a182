class S2 extends Abstract14 {
  void enter() {
    send("msg18");
    try {
      new S19();
      switch (event) {
        case EV53:
          send("msg17");
          send("msg17");
          break;
        case EV54:
          new S55();
          log("note");
          try {
            send("msg19");
            new S45();
            new S66();
          } finally {
            new S12();
          }
          if (x4 > 0) {
            new S5();
            send("msg9");
          }
          break;
        case EV55:
          log("note");
          switch (event) {
            case EV56:
              send("msg15");
              new S57();
              break;
            case EV57:
              send("msg14");
              break;
            case EV58:
              new S1();
              new S39();
              new S27();
              log("note");
              break;
          }
          send("msg11");
          break;
      }
      log("note");
    } catch (IOException e) {
      switch (event) {
        case EV59:
          new S100();
          break;
      }
    } catch (IllegalStateException e) {
      new S16();
      try {
        if (x1 > 0) {
          new S2();
          log("note");
        } else {
          new S30();
          new S86();
          new S77();
        }
        new S13();
        switch (event) {
          case EV60:
            send("msg17");
            log("note");
            break;
        }
      } catch (TimeoutException e) {
        try {
          new S80();
          send("msg6");
        } catch (IOException e) {
          new S40();
          new S42();
          log("note");
        } catch (TimeoutException e) {
          send("msg13");
          new S11();
          send("msg3");
        }
      } finally {
        new S96();
        send("msg15");
        log("note");
      }
      send("msg9");
      try {
        new S30();
        send("msg12");
        if (x6 > 0) {
          new S64();
          new S99();
          new S92();
        }
      } catch (IOException e) {
        new Helper();
        send("msg15");
        if (x9 > 0) {
          new S66();
          log("note");
        } else {
          new S57();
        }
        switch (event) {
          case EV61:
            new S70();
            new S77();
            send("msg11");
            log("note");
            break;
          case EV62:
            send("msg15");
            send("msg18");
            break;
        }
      } catch (IllegalStateException e) {
        new State();
      }
    }
    switch (event) {
      case EV63:
        new S14();
        new S88();
        break;
    }
    new S68();
  }
  void exit() {
    try {
      log("note");
      try {
        if (x4 > 0) {
          new S24();
          send("msg8");
          new S66();
        } else {
          new Helper();
          new S35();
          new S66();
          new S44();
        }
        new S58();
      } catch (IOException e) {
        new S79();
      }
    } catch (IOException e) {
      new S93();
      switch (event) {
        case EV64:
          try {
            new S5();
            new S47();
            send("msg17");
          } catch (IllegalStateException e) {
            new S28();
          } catch (TimeoutException e) {
            send("msg5");
            new Helper();
            new S81();
            new S27();
          }
          if (x6 > 0) {
            new S6();
            send("msg7");
            send("msg3");
            new S20();
          } else {
            new S13();
            new S40();
          }
          break;
      }
    }
    new S89();
    if (x7 > 0) {
      switch (event) {
        case EV65:
          if (x8 > 0) {
            new S49();
          } else {
            new S68();
            new Helper();
            new S60();
          }
          switch (event) {
            case EV66:
              log("note");
              break;
            case EV67:
              new S16();
              new S84();
              break;
            case EV68:
              send("msg18");
              send("msg18");
              log("note");
              break;
          }
          break;
        case EV69:
          try {
            log("note");
            send("msg1");
          } catch (IOException e) {
            new S46();
            send("msg0");
            new S25();
            new S11();
          }
          try {
            send("msg12");
            new S62();
          } finally {
            send("msg15");
            send("msg13");
            new S69();
            new S100();
          }
          send("msg10");
          break;
      }
    } else {
      if (x1 > 0) {
        new S92();
        new S75();
        try {
          send("msg12");
          send("msg18");
          new S25();
        } catch (IOException e) {
          send("msg10");
          new S40();
        } finally {
          new S43();
          new S89();
        }
        if (x0 > 0) {
          send("msg12");
          new S50();
          new S2();
        }
      } else {
        if (x1 > 0) {
          new S63();
          log("note");
          send("msg17");
        }
        switch (event) {
          case EV70:
            log("note");
            send("msg5");
            new S62();
            break;
          case EV71:
            new S2();
            send("msg17");
            break;
        }
      }
    }
  }
  public void handle() {
    switch (event) {
      case EV72:
        switch (event) {
          case EV73:
            if (x1 > 0) {
              new S73();
              new S42();
            }
            switch (event) {
              case EV74:
                new S35();
                new S38();
                log("note");
                break;
              case EV75:
                send("msg1");
                new S89();
                new S92();
                new S50();
                break;
            }
            new S28();
            send("msg11");
            break;
        }
        send("msg12");
        switch (event) {
          case EV76:
            if (x3 > 0) {
              new S9();
              send("msg2");
              log("note");
            } else {
              log("note");
            }
            send("msg18");
            log("note");
            send("msg13");
            break;
        }
        log("note");
        break;
    }
  }
  void tick() {
    if (x8 > 0) {
      new S52();
      switch (event) {
        case EV77:
          try {
            send("msg2");
            send("msg7");
          } catch (IllegalStateException e) {
            send("msg18");
            send("msg3");
            new S27();
          }
          switch (event) {
            case EV78:
              new State();
              send("msg10");
              send("msg12");
              break;
            case EV79:
              send("msg11");
              send("msg16");
              send("msg18");
              send("msg12");
              break;
          }
          break;
        case EV80:
          new S89();
          new S55();
          new S16();
          new S89();
          break;
      }
      log("note");
    } else {
      new S62();
    }
    try {
      try {
        switch (event) {
          case EV81:
            send("msg13");
            break;
        }
        send("msg13");
      } catch (IOException e) {
        if (x0 > 0) {
          new S88();
          new S6();
        } else {
          new S91();
        }
      } finally {
        new S13();
        new S68();
        if (x6 > 0) {
          send("msg8");
          new Helper();
          new S46();
          new S86();
        } else {
          log("note");
          new Helper();
          send("msg9");
          send("msg2");
        }
        new S61();
      }
      new S35();
      switch (event) {
        case EV82:
          try {
            new S80();
            new S61();
          } catch (TimeoutException e) {
            send("msg18");
            send("msg16");
            log("note");
            new S49();
          } catch (IllegalStateException e) {
            new S100();
            new S43();
            new S75();
          }
          break;
        case EV83:
          send("msg9");
          new S9();
          send("msg18");
          break;
        case EV84:
          new S51();
          send("msg15");
          if (x4 > 0) {
            new S8();
            log("note");
          } else {
            send("msg13");
            send("msg15");
            send("msg3");
            log("note");
          }
          try {
            send("msg0");
            new S37();
            new S77();
          } catch (IOException e) {
            new State();
            send("msg13");
            log("note");
          } catch (IllegalStateException e) {
            new S47();
          }
          break;
      }
      new S39();
    } finally {
      new S21();
      switch (event) {
        case EV85:
          send("msg7");
          send("msg7");
          try {
            new S28();
            new S86();
            send("msg11");
          } catch (TimeoutException e) {
            send("msg5");
            log("note");
            send("msg13");
          } catch (TimeoutException e) {
            new S3();
            new S81();
          }
          break;
        case EV86:
          send("msg2");
          new S79();
          new S61();
          break;
      }
      new S92();
      new S49();
    }
  }
  void reset() {
    try {
      new S5();
      switch (event) {
        case EV87:
          new S53();
          break;
        case EV88:
          new Helper();
          if (x6 > 0) {
            new S25();
            send("msg15");
          } else {
            send("msg7");
            new Helper();
            send("msg0");
          }
          send("msg1");
          break;
        case EV89:
          send("msg19");
          switch (event) {
            case EV90:
              new S1();
              send("msg14");
              new S52();
              break;
          }
          break;
      }
      send("msg7");
      new State();
    } catch (TimeoutException e) {
      if (x4 > 0) {
        log("note");
        try {
          send("msg9");
          new S88();
        } catch (TimeoutException e) {
          new S41();
          new S30();
          send("msg5");
        } finally {
          new S14();
        }
        try {
          new S89();
          new S76();
        } catch (IOException e) {
          send("msg9");
          new S66();
        }
      } else {
        log("note");
        switch (event) {
          case EV91:
            new S5();
            break;
        }
        log("note");
      }
      new S64();
    } finally {
      new State();
    }
    send("msg16");
    send("msg4");
  }
  void open() {
    new S20();
  }
  void close() {
    new State();
    new S81();
    send("msg7");
    try {
      new S26();
      send("msg15");
    } catch (TimeoutException e) {
      new S25();
      if (x9 > 0) {
        new S61();
      }
      send("msg11");
    } catch (TimeoutException e) {
      send("msg19");
      new S65();
    }
  }
  void start() {
    if (x7 > 0) {
      switch (event) {
        case EV92:
          send("msg8");
          log("note");
          break;
        case EV93:
          if (x1 > 0) {
            log("note");
            send("msg19");
            new S61();
            new S10();
          }
          new S64();
          send("msg12");
          new S70();
          break;
        case EV94:
          send("msg12");
          send("msg9");
          break;
      }
    }
    try {
      new S64();
      send("msg7");
      try {
        new S5();
        try {
          send("msg2");
          new S67();
          new S46();
        } catch (IOException e) {
          send("msg17");
        }
        send("msg7");
      } catch (IllegalStateException e) {
        new S13();
        send("msg0");
        send("msg7");
        try {
          send("msg17");
          send("msg16");
          send("msg17");
          new S21();
        } catch (TimeoutException e) {
          new S69();
          send("msg10");
        } finally {
          send("msg0");
        }
      }
    } catch (TimeoutException e) {
      log("note");
      new S32();
    }
  }
  void stop() {
    new S31();
    send("msg18");
  }
  public void pause() {
    new S83();
  }
}
