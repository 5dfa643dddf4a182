class S75 extends Abstract13 {
  void enter() {
    if (x9 > 0) {
      send("msg3");
    }
    log("note");
    new S67();
    send("msg4");
  }
  public void exit() {
    switch (event) {
      case EV2296:
        send("msg6");
        break;
    }
  }
  void handle() {
    if (x0 > 0) {
      log("note");
      new S48();
    }
    new S94();
    send("msg9");
  }
  public void tick() {
    new S88();
  }
  public void reset() {
    switch (event) {
      case EV2297:
        log("note");
        break;
      case EV2298:
        send("msg8");
        send("msg17");
        switch (event) {
          case EV2299:
            new S61();
            send("msg11");
            break;
        }
        break;
    }
    new State();
  }
  public void open() {
    log("note");
  }
  void close() {
    new S16();
    log("note");
  }
  void start() {
    new S95();
  }
  public void stop() {
    switch (event) {
      case EV2300:
        new S74();
        break;
      case EV2301:
        send("msg11");
        break;
    }
    new S69();
    new State();
  }
  public void pause() {
    send("msg16");
    try {
      new S92();
      log("note");
      log("note");
    } catch (IOException e) {
      try {
        try {
          new S60();
          send("msg18");
          log("note");
          new S29();
        } catch (TimeoutException e) {
          new S92();
        } catch (IOException e) {
          new S40();
          new S55();
          send("msg19");
        }
        try {
          new S35();
          send("msg11");
          new S86();
        } catch (TimeoutException e) {
          new State();
          new State();
          send("msg8");
        } catch (IllegalStateException e) {
          new S70();
        }
        try {
          log("note");
          new S28();
          new S44();
          log("note");
        } catch (TimeoutException e) {
          new S3();
          new Helper();
        }
      } catch (IOException e) {
        switch (event) {
          case EV2302:
            send("msg14");
            new S64();
            new Helper();
            break;
          case EV2303:
            new S18();
            new S1();
            send("msg17");
            new S60();
            break;
        }
        switch (event) {
          case EV2304:
            new State();
            send("msg10");
            break;
          case EV2305:
            send("msg8");
            send("msg10");
            send("msg10");
            send("msg16");
            break;
        }
      } catch (IllegalStateException e) {
        if (x5 > 0) {
          send("msg7");
          send("msg7");
          log("note");
        } else {
          send("msg14");
          send("msg11");
        }
      }
      send("msg5");
    } finally {
      send("msg9");
      try {
        new S22();
      } catch (IOException e) {
        log("note");
      }
      if (x3 > 0) {
        send("msg17");
        switch (event) {
          case EV2306:
            log("note");
            break;
          case EV2307:
            new S84();
            send("msg12");
            log("note");
            break;
        }
        try {
          new S45();
        } finally {
          send("msg4");
          send("msg15");
        }
      } else {
        new State();
        try {
          new Helper();
          new S65();
          log("note");
          new S80();
        } catch (IllegalStateException e) {
          new S63();
          send("msg13");
          send("msg0");
          new S31();
        } finally {
          log("note");
          new S36();
          new S76();
          send("msg0");
        }
        send("msg14");
        try {
          new S14();
        } catch (TimeoutException e) {
          new S40();
          send("msg7");
          new S95();
        } catch (IOException e) {
          send("msg13");
          new S4();
          send("msg4");
          new S34();
        }
      }
      new S18();
    }
    new S16();
    new S22();
  }
}
