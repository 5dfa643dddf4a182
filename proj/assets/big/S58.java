class S58 extends Abstract6 {
  void enter() {
    switch (event) {
      case EV1749:
        try {
          new S36();
          new S31();
        } finally {
          new S99();
          try {
            send("msg17");
          } catch (IOException e) {
            new S98();
            send("msg0");
            new S17();
            new S78();
          } catch (IOException e) {
            log("note");
            new S9();
            send("msg11");
            send("msg18");
          }
          switch (event) {
            case EV1750:
              new S16();
              new S13();
              send("msg19");
              new S64();
              break;
          }
          new S3();
        }
        new S4();
        try {
          send("msg14");
        } catch (TimeoutException e) {
          new S39();
          if (x6 > 0) {
            send("msg1");
            new S36();
            new S50();
          }
          send("msg5");
        } finally {
          send("msg1");
          send("msg14");
          log("note");
        }
        break;
      case EV1751:
        log("note");
        new S35();
        new S58();
        new S32();
        break;
      case EV1752:
        new S76();
        new S18();
        send("msg11");
        break;
    }
    log("note");
  }
  public void exit() {
    new S76();
    new S68();
  }
  void handle() {
    log("note");
  }
  void tick() {
    log("note");
    send("msg4");
    new S62();
    new S38();
  }
  void reset() {
    new S75();
    new S95();
    log("note");
  }
  void open() {
    switch (event) {
      case EV1753:
        send("msg7");
        new S17();
        send("msg0");
        try {
          new S31();
          send("msg16");
          send("msg2");
          if (x1 > 0) {
            send("msg7");
            send("msg9");
          }
        } finally {
          send("msg1");
        }
        break;
      case EV1754:
        new S8();
        break;
      case EV1755:
        send("msg17");
        new S32();
        break;
    }
  }
  void close() {
    try {
      new S6();
    } catch (IOException e) {
      send("msg17");
      send("msg12");
      switch (event) {
        case EV1756:
          log("note");
          if (x7 > 0) {
            send("msg1");
            send("msg17");
            new S27();
          }
          if (x0 > 0) {
            new State();
          }
          break;
        case EV1757:
          if (x4 > 0) {
            new S25();
            new Helper();
            new S10();
            send("msg9");
          } else {
            send("msg6");
            log("note");
            send("msg17");
            new S2();
          }
          break;
      }
    }
  }
  void start() {
    new S55();
  }
  public void stop() {
    if (x9 > 0) {
      new S15();
      try {
        new S89();
        send("msg15");
        new S26();
        new S67();
      } catch (TimeoutException e) {
        new S100();
      } catch (TimeoutException e) {
        log("note");
        new S38();
      }
    }
  }
  void pause() {
    send("msg17");
    send("msg2");
  }
}
