class S3 extends Abstract1 {
  void enter() {
    send("msg1");
    new S2();
    new S22();
  }
  void exit() {
    new S8();
    new S14();
    new S5();
  }
  public void handle() {
    new S4();
    send("msg3");
  }
  public void tick() {
    new S2();
    new S23();
  }
  void reset() {
    switch (event) {
      case EV46:
        if (x5 > 0) {
          new S27();
        } else {
          new S19();
          new S22();
          send("msg8");
          send("msg7");
        }
        switch (event) {
          case EV47:
            switch (event) {
              case EV48:
                send("msg13");
                break;
              case EV49:
                log("note");
                log("note");
                send("msg9");
                log("note");
                break;
            }
            new State();
            new S17();
            break;
        }
        break;
      case EV50:
        send("msg10");
        new S18();
        send("msg19");
        break;
    }
  }
}
