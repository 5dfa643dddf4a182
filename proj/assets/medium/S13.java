class S13 extends Abstract2 {
  void enter() {
    log("note");
    switch (event) {
      case EV215:
        log("note");
        break;
    }
  }
  void exit() {
    try {
      switch (event) {
        case EV216:
          log("note");
          send("msg18");
          new S7();
          break;
        case EV217:
          send("msg17");
          if (x8 > 0) {
            new S18();
            new S19();
            log("note");
            new S7();
          }
          log("note");
          break;
        case EV218:
          send("msg19");
          send("msg18");
          break;
      }
    } finally {
      new S18();
      send("msg1");
      send("msg17");
    }
    switch (event) {
      case EV219:
        log("note");
        new S14();
        log("note");
        break;
    }
    new S23();
    log("note");
  }
  void handle() {
    send("msg17");
    new S19();
  }
  void tick() {
    send("msg17");
    new S19();
    send("msg7");
  }
  void reset() {
    send("msg14");
    new S7();
    new S21();
    new S3();
  }
}
