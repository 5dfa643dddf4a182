class S92 extends Abstract17 {
  public void enter() {
    log("note");
    send("msg13");
  }
  public void exit() {
    new S40();
    new S40();
    new S52();
  }
  void handle() {
    send("msg16");
    new S34();
    new S15();
    new S36();
  }
  void tick() {
    new S53();
  }
  void reset() {
    if (x4 > 0) {
      switch (event) {
        case EV2799:
          send("msg8");
          break;
      }
    }
    new S68();
    new S89();
  }
  void open() {
    send("msg3");
  }
  void close() {
    new S70();
    try {
      send("msg13");
      new S23();
      if (x1 > 0) {
        new S16();
      }
    } finally {
      if (x4 > 0) {
        if (x6 > 0) {
          new S64();
          new S26();
          new S68();
          new S31();
        }
      }
      if (x9 > 0) {
        send("msg6");
      } else {
        new S41();
        new S58();
        try {
          new S50();
          new Helper();
          send("msg6");
          new S35();
        } catch (TimeoutException e) {
          new Helper();
        }
      }
      switch (event) {
        case EV2800:
          try {
            new S30();
          } catch (TimeoutException e) {
            new S5();
          }
          break;
      }
      send("msg13");
    }
  }
  void start() {
    send("msg15");
    new S39();
    if (x7 > 0) {
      new S11();
      new S12();
    }
  }
  void stop() {
    log("note");
    new S71();
    send("msg16");
  }
  void pause() {
    switch (event) {
      case EV2801:
        if (x7 > 0) {
          try {
            new S1();
          } catch (IOException e) {
            new S36();
            send("msg7");
            new S26();
          }
        }
        break;
      case EV2802:
        send("msg8");
        switch (event) {
          case EV2803:
            new S68();
            break;
          case EV2804:
            send("msg14");
            new S30();
            break;
        }
        if (x4 > 0) {
          log("note");
          new S73();
          send("msg4");
          switch (event) {
            case EV2805:
              log("note");
              new S36();
              send("msg14");
              log("note");
              break;
            case EV2806:
              send("msg0");
              new S65();
              break;
          }
        }
        log("note");
        break;
      case EV2807:
        send("msg16");
        send("msg14");
        break;
    }
    new S93();
    send("msg12");
  }
}
