class S9 extends Abstract6 {
  void enter() {
    new S5();
  }
  void exit() {
    new S29();
    switch (event) {
      case EV149:
        send("msg7");
        new S23();
        switch (event) {
          case EV150:
            new S20();
            send("msg7");
            send("msg2");
            if (x4 > 0) {
              send("msg2");
              new S28();
              new S27();
            } else {
              new S23();
              new S30();
            }
            break;
        }
        try {
          new S16();
          try {
            new S29();
            new S7();
            new S14();
            new S7();
          } catch (TimeoutException e) {
            new Helper();
            log("note");
            new S22();
          } catch (TimeoutException e) {
            new State();
            send("msg4");
            log("note");
            send("msg1");
          }
        } finally {
          send("msg2");
          try {
            new S30();
            log("note");
          } catch (TimeoutException e) {
            new S2();
            log("note");
            log("note");
          } finally {
            send("msg2");
            log("note");
            new S11();
          }
        }
        break;
    }
  }
  public void handle() {
    new S20();
    log("note");
    if (x4 > 0) {
      send("msg4");
    }
    new S23();
  }
  void tick() {
    new S9();
    if (x2 > 0) {
      send("msg18");
      try {
        new S10();
        send("msg13");
      } catch (IllegalStateException e) {
        new S3();
        new State();
      } catch (TimeoutException e) {
        log("note");
        new S1();
        send("msg18");
        new S30();
      }
    }
    new Helper();
  }
  public void reset() {
    new S24();
    log("note");
    try {
      send("msg1");
    } catch (IllegalStateException e) {
      send("msg17");
    }
    new S24();
  }
}
