class S16 extends Abstract2 {
  void enter() {
    send("msg10");
  }
  void exit() {
    try {
      log("note");
    } finally {
      switch (event) {
        case EV239:
          send("msg12");
          new S12();
          break;
      }
      new S2();
    }
    send("msg15");
    log("note");
    log("note");
  }
  void handle() {
    new State();
    new S19();
  }
  void tick() {
    log("note");
    send("msg15");
    switch (event) {
      case EV240:
        new S14();
        break;
    }
  }
  public void reset() {
    send("msg10");
    try {
      send("msg10");
      new S25();
    } catch (TimeoutException e) {
      switch (event) {
        case EV241:
          switch (event) {
            case EV242:
              new S14();
              break;
          }
          new S23();
          try {
            log("note");
          } catch (TimeoutException e) {
            send("msg1");
            new S28();
          }
          new State();
          break;
      }
      new S12();
      if (x4 > 0) {
        try {
          new Helper();
          send("msg12");
        } catch (TimeoutException e) {
          send("msg2");
          send("msg7");
          log("note");
        }
        send("msg3");
      }
    } finally {
      new S1();
      try {
        new S26();
      } catch (IllegalStateException e) {
        switch (event) {
          case EV243:
            send("msg4");
            new S13();
            new S24();
            log("note");
            break;
          case EV244:
            send("msg14");
            new S19();
            break;
        }
        send("msg13");
        send("msg15");
      } finally {
        switch (event) {
          case EV245:
            new S20();
            log("note");
            new S5();
            break;
          case EV246:
            log("note");
            log("note");
            break;
        }
        new S23();
        if (x7 > 0) {
          new State();
          new S19();
          send("msg3");
        }
      }
      new State();
    }
    new S1();
  }
}
