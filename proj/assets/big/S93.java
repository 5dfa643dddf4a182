class S93 extends Abstract19 {
  void enter() {
    new S100();
    new S90();
  }
  void exit() {
    new Helper();
  }
  void handle() {
    send("msg14");
    if (x1 > 0) {
      new S76();
      new S5();
    } else {
      try {
        send("msg12");
        if (x4 > 0) {
          log("note");
        }
        if (x0 > 0) {
          new S40();
          log("note");
          new S1();
        }
        new S36();
      } catch (TimeoutException e) {
        send("msg15");
        new S4();
        new S82();
      }
    }
  }
  public void tick() {
    new S31();
  }
  public void reset() {
    if (x8 > 0) {
      send("msg19");
    }
    new S41();
    if (x3 > 0) {
      switch (event) {
        case EV2808:
          try {
            send("msg14");
          } catch (IOException e) {
            new S18();
          }
          switch (event) {
            case EV2809:
              new S52();
              send("msg0");
              new S40();
              send("msg4");
              break;
          }
          new S29();
          break;
        case EV2810:
          if (x4 > 0) {
            new S13();
            new S96();
            new State();
            new S13();
          } else {
            send("msg2");
            send("msg10");
            send("msg11");
            new S57();
          }
          send("msg8");
          new State();
          if (x9 > 0) {
            log("note");
            new S38();
            new Helper();
          } else {
            send("msg6");
            send("msg4");
            new S2();
          }
          break;
      }
      send("msg11");
    } else {
      switch (event) {
        case EV2811:
          new S81();
          send("msg1");
          if (x0 > 0) {
            send("msg18");
          } else {
            new S88();
            send("msg0");
            new S28();
          }
          new S81();
          break;
        case EV2812:
          new S36();
          if (x2 > 0) {
            new S87();
            new S88();
            log("note");
            new S85();
          } else {
            new S38();
            new S49();
            log("note");
          }
          switch (event) {
            case EV2813:
              new S73();
              break;
            case EV2814:
              send("msg2");
              send("msg15");
              new S64();
              log("note");
              break;
            case EV2815:
              new S4();
              new S39();
              break;
          }
          break;
        case EV2816:
          switch (event) {
            case EV2817:
              send("msg19");
              send("msg0");
              break;
            case EV2818:
              new S98();
              send("msg0");
              new S99();
              break;
            case EV2819:
              new S46();
              log("note");
              send("msg7");
              break;
          }
          send("msg16");
          new S7();
          break;
      }
    }
    send("msg12");
  }
  public void open() {
    new S30();
    new S49();
  }
  public void close() {
    send("msg9");
  }
  public void start() {
    new S43();
    send("msg11");
    try {
      new S55();
      if (x7 > 0) {
        send("msg3");
      } else {
        send("msg17");
      }
      new S18();
    } catch (IllegalStateException e) {
      if (x3 > 0) {
        log("note");
        switch (event) {
          case EV2820:
            new State();
            new S60();
            send("msg13");
            break;
          case EV2821:
            send("msg11");
            new S57();
            send("msg17");
            new S33();
            break;
        }
      }
    }
  }
  void stop() {
    send("msg15");
    send("msg9");
    log("note");
  }
  void pause() {
    send("msg6");
    send("msg1");
    new S78();
    if (x7 > 0) {
      new S15();
    } else {
      send("msg8");
      send("msg16");
      new S73();
      log("note");
    }
  }
}
