class S82 extends Abstract2 {
  void enter() {
    log("note");
    new Helper();
  }
  public void exit() {
    log("note");
  }
  void handle() {
    if (x2 > 0) {
      try {
        new S80();
        log("note");
        send("msg9");
      } catch (TimeoutException e) {
        new State();
        switch (event) {
          case EV2507:
            new S24();
            break;
          case EV2508:
            new S43();
            break;
        }
      }
      new S17();
      switch (event) {
        case EV2509:
          try {
            send("msg1");
            new S80();
            send("msg8");
            new S13();
          } finally {
            new State();
            new S10();
            send("msg16");
            send("msg16");
          }
          new S40();
          log("note");
          break;
      }
      send("msg6");
    } else {
      new S5();
    }
  }
  void tick() {
    new Helper();
  }
  void reset() {
    send("msg13");
    send("msg9");
    send("msg11");
  }
  void open() {
    send("msg8");
    send("msg17");
    new S8();
  }
  public void close() {
    new S30();
    switch (event) {
      case EV2510:
        switch (event) {
          case EV2511:
            send("msg19");
            break;
        }
        break;
      case EV2512:
        send("msg14");
        try {
          new S31();
          try {
            new S12();
            send("msg0");
          } catch (IllegalStateException e) {
            log("note");
            log("note");
            send("msg4");
            new S20();
          } finally {
            send("msg13");
            new S84();
          }
        } catch (TimeoutException e) {
          send("msg6");
          switch (event) {
            case EV2513:
              new S8();
              new S90();
              log("note");
              break;
            case EV2514:
              log("note");
              break;
          }
          try {
            new S99();
            log("note");
            send("msg15");
          } catch (IllegalStateException e) {
            new S95();
            new S85();
            send("msg13");
          }
        }
        send("msg10");
        new S89();
        break;
      case EV2515:
        new S71();
        new S91();
        new S65();
        new S54();
        break;
    }
    log("note");
  }
  void start() {
    new S91();
    try {
      try {
        send("msg2");
        if (x9 > 0) {
          new S54();
          new S56();
          new S50();
          new S21();
        } else {
          send("msg1");
          new S85();
        }
        send("msg10");
        new S47();
      } finally {
        try {
          send("msg17");
        } catch (IOException e) {
          log("note");
          new S65();
          send("msg8");
          new S79();
        } catch (IllegalStateException e) {
          send("msg11");
          new S21();
          new State();
          send("msg1");
        }
      }
      new S84();
      new S92();
      new S46();
    } catch (IOException e) {
      send("msg0");
      send("msg17");
      send("msg3");
    } finally {
      new S20();
      log("note");
      send("msg0");
      new S3();
    }
    send("msg19");
    log("note");
  }
  void stop() {
    new S45();
    new S31();
  }
  void pause() {
    send("msg2");
    try {
      new S43();
      send("msg6");
    } catch (IllegalStateException e) {
      send("msg4");
      switch (event) {
        case EV2516:
          new S1();
          if (x7 > 0) {
            new S48();
            new S77();
            send("msg14");
            send("msg15");
          }
          break;
        case EV2517:
          send("msg11");
          break;
      }
    }
  }
}
