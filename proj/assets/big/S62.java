class S62 extends Abstract8 {
  void enter() {
    switch (event) {
      case EV1854:
        try {
          log("note");
        } finally {
          if (x6 > 0) {
            new S60();
            new S39();
            new S74();
          }
        }
        send("msg14");
        send("msg6");
        send("msg3");
        break;
      case EV1855:
        send("msg15");
        send("msg0");
        switch (event) {
          case EV1856:
            new S70();
            send("msg9");
            send("msg8");
            break;
        }
        break;
    }
    log("note");
    send("msg5");
    new Helper();
  }
  public void exit() {
    new S23();
    new S32();
    log("note");
    send("msg10");
  }
  void handle() {
    switch (event) {
      case EV1857:
        if (x0 > 0) {
          if (x6 > 0) {
            log("note");
          }
        } else {
          new S87();
          send("msg0");
          log("note");
        }
        switch (event) {
          case EV1858:
            send("msg13");
            if (x0 > 0) {
              new S21();
              new S60();
              send("msg12");
              send("msg0");
            }
            break;
        }
        send("msg0");
        send("msg8");
        break;
      case EV1859:
        new S18();
        if (x8 > 0) {
          new S49();
          send("msg7");
        } else {
          new S25();
          new State();
          if (x6 > 0) {
            new S4();
            new S76();
            new S27();
          }
        }
        break;
      case EV1860:
        switch (event) {
          case EV1861:
            new S56();
            log("note");
            new S82();
            if (x7 > 0) {
              new S43();
              send("msg4");
              new S10();
            } else {
              log("note");
              send("msg2");
              new Helper();
            }
            break;
          case EV1862:
            new S90();
            new S37();
            break;
        }
        new S31();
        new S67();
        new S76();
        break;
    }
    new S19();
  }
  public void tick() {
    send("msg10");
    new S57();
    send("msg18");
    if (x5 > 0) {
      switch (event) {
        case EV1863:
          try {
            send("msg6");
          } catch (TimeoutException e) {
            new S31();
          }
          break;
      }
      send("msg7");
      new S33();
      new State();
    } else {
      new S66();
      try {
        new S9();
        new S28();
        send("msg3");
        new S72();
      } catch (TimeoutException e) {
        if (x8 > 0) {
          new S22();
          new S80();
        } else {
          send("msg17");
          new S6();
          send("msg10");
          new S65();
        }
      } catch (TimeoutException e) {
        try {
          send("msg8");
          log("note");
        } catch (TimeoutException e) {
          log("note");
          send("msg7");
          new State();
        }
      }
      new S87();
    }
  }
  void reset() {
    new S93();
  }
  public void open() {
    if (x3 > 0) {
      new S47();
      if (x3 > 0) {
        if (x2 > 0) {
          new S93();
          new S66();
          send("msg12");
        }
        switch (event) {
          case EV1864:
            send("msg5");
            send("msg11");
            break;
          case EV1865:
            new S15();
            send("msg17");
            break;
        }
        new S21();
        send("msg0");
      }
    } else {
      switch (event) {
        case EV1866:
          log("note");
          new S26();
          send("msg19");
          try {
            new S54();
            new S40();
            send("msg12");
          } finally {
            send("msg8");
          }
          break;
        case EV1867:
          send("msg8");
          send("msg14");
          break;
      }
    }
    send("msg14");
  }
  public void close() {
    new S43();
    if (x1 > 0) {
      log("note");
      new S89();
      new S5();
      new S30();
    }
    new State();
  }
  void start() {
    new S34();
  }
  public void stop() {
    new S62();
    new S43();
    new S88();
  }
  public void pause() {
    send("msg3");
  }
}
