class S24 extends Abstract6 {
  void enter() {
    send("msg3");
    switch (event) {
      case EV395:
        switch (event) {
          case EV396:
            new S16();
            send("msg12");
            break;
        }
        send("msg5");
        break;
      case EV397:
        new S24();
        new S29();
        break;
      case EV398:
        new S22();
        if (x4 > 0) {
          new S29();
        }
        break;
    }
    new S8();
  }
  public void exit() {
    send("msg0");
    send("msg6");
  }
  public void handle() {
    send("msg8");
    log("note");
    new S15();
    new S16();
  }
  void tick() {
    if (x9 > 0) {
      new S13();
    } else {
      send("msg11");
      new S22();
    }
    if (x2 > 0) {
      send("msg6");
      switch (event) {
        case EV399:
          new S17();
          new S25();
          new S12();
          new S5();
          break;
        case EV400:
          try {
            new S15();
            send("msg14");
            new S6();
          } catch (IllegalStateException e) {
            new S1();
            log("note");
            new S1();
            send("msg11");
          } finally {
            new S15();
            send("msg5");
            send("msg13");
            send("msg16");
          }
          new S7();
          if (x0 > 0) {
            send("msg17");
            send("msg7");
            new S7();
            send("msg13");
          }
          send("msg16");
          break;
      }
      send("msg1");
      send("msg9");
    } else {
      new S23();
      send("msg18");
      switch (event) {
        case EV401:
          switch (event) {
            case EV402:
              new S13();
              new S2();
              new S7();
              send("msg17");
              break;
            case EV403:
              new S4();
              log("note");
              send("msg10");
              break;
            case EV404:
              log("note");
              new S21();
              break;
          }
          if (x3 > 0) {
            new S30();
            new S3();
            new S2();
            new S3();
          } else {
            send("msg0");
            new Helper();
            send("msg5");
          }
          new S2();
          break;
        case EV405:
          send("msg2");
          break;
        case EV406:
          try {
            new S27();
          } catch (TimeoutException e) {
            new S16();
          }
          if (x8 > 0) {
            new S5();
            log("note");
          } else {
            new S9();
            new S30();
          }
          new S30();
          break;
      }
      new S20();
    }
    try {
      switch (event) {
        case EV407:
          new S16();
          new S25();
          send("msg16");
          if (x4 > 0) {
            log("note");
            new S7();
            new S29();
          } else {
            new State();
            send("msg9");
          }
          break;
      }
    } finally {
      new S5();
      send("msg8");
      new S6();
      send("msg2");
    }
  }
  void reset() {
    new S9();
  }
}
