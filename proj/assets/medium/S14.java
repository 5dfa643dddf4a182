class S14 extends Abstract3 {
  void enter() {
    new Helper();
    try {
      new State();
    } catch (TimeoutException e) {
      new S20();
      if (x8 > 0) {
        send("msg14");
        send("msg15");
        new State();
      } else {
        new S2();
      }
      send("msg14");
      new S30();
    } finally {
      send("msg0");
    }
  }
  void exit() {
    new S23();
    new S16();
  }
  public void handle() {
    switch (event) {
      case EV220:
        send("msg15");
        break;
      case EV221:
        send("msg19");
        break;
    }
    new S18();
  }
  void tick() {
    send("msg17");
    try {
      try {
        new Helper();
        send("msg12");
      } finally {
        if (x6 > 0) {
          send("msg1");
        }
        new S20();
      }
    } catch (TimeoutException e) {
      log("note");
    }
    send("msg17");
  }
  void reset() {
    new S5();
  }
}
