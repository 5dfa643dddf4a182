class S7 extends Abstract2 {
  public void enter() {
    new S16();
    try {
      send("msg14");
      send("msg18");
      new S15();
      if (x5 > 0) {
        if (x1 > 0) {
          send("msg15");
        } else {
          new S24();
          send("msg11");
          log("note");
          new S7();
        }
        switch (event) {
          case EV91:
            new S12();
            break;
          case EV92:
            new S5();
            new S9();
            new S1();
            new S23();
            break;
        }
        new S10();
      } else {
        send("msg1");
        new S12();
      }
    } catch (IllegalStateException e) {
      switch (event) {
        case EV93:
          log("note");
          send("msg13");
          if (x8 > 0) {
            send("msg6");
            send("msg11");
          } else {
            send("msg1");
            log("note");
          }
          break;
      }
    } finally {
      new S21();
      send("msg16");
      new S8();
    }
    send("msg19");
    if (x7 > 0) {
      send("msg3");
      switch (event) {
        case EV94:
          send("msg8");
          if (x2 > 0) {
            send("msg12");
            log("note");
          } else {
            send("msg6");
          }
          new S10();
          break;
        case EV95:
          switch (event) {
            case EV96:
              new S6();
              new S26();
              new S20();
              break;
            case EV97:
              new S30();
              break;
          }
          break;
        case EV98:
          new S18();
          new S14();
          break;
      }
    }
  }
  void exit() {
    new S15();
    new State();
    switch (event) {
      case EV99:
        new S15();
        send("msg2");
        try {
          new S16();
          if (x4 > 0) {
            send("msg8");
            new Helper();
            send("msg6");
            new S8();
          } else {
            new S28();
            new S11();
          }
          send("msg11");
        } catch (IOException e) {
          send("msg3");
        } finally {
          new State();
        }
        log("note");
        break;
      case EV100:
        new S10();
        send("msg12");
        break;
    }
  }
  void handle() {
    send("msg18");
    send("msg7");
    new S4();
    new S26();
  }
  void tick() {
    switch (event) {
      case EV101:
        new S17();
        new S20();
        new S27();
        break;
      case EV102:
        try {
          new S21();
          new S25();
          new S25();
          new S10();
        } catch (IOException e) {
          switch (event) {
            case EV103:
              new S2();
              send("msg12");
              new S16();
              send("msg8");
              break;
            case EV104:
              log("note");
              break;
            case EV105:
              new S23();
              new S16();
              break;
          }
          new S10();
        } catch (TimeoutException e) {
          switch (event) {
            case EV106:
              send("msg2");
              new Helper();
              new S10();
              break;
            case EV107:
              new S9();
              send("msg0");
              new S2();
              break;
            case EV108:
              log("note");
              break;
          }
          new S28();
        }
        new S4();
        new S22();
        break;
    }
  }
  void reset() {
    log("note");
    new S22();
    send("msg2");
    new S18();
  }
}
