class S19 extends Abstract2 {
  void enter() {
    log("note");
  }
  void exit() {
    new S41();
    send("msg12");
    new S5();
  }
  void handle() {
    try {
      new S33();
    } catch (TimeoutException e) {
      if (x4 > 0) {
        try {
          new S26();
          send("msg12");
          new S90();
          new S2();
        } catch (TimeoutException e) {
          new S24();
          log("note");
          new Helper();
          log("note");
        } catch (IllegalStateException e) {
          new S62();
          new S66();
          send("msg2");
        }
      }
    } catch (IllegalStateException e) {
      try {
        send("msg7");
        send("msg17");
        send("msg7");
        new S95();
      } finally {
        send("msg7");
        if (x0 > 0) {
          send("msg12");
          new S19();
          new S79();
        }
        new S82();
        new S41();
      }
    }
  }
  public void tick() {
    send("msg15");
    send("msg3");
    new S53();
    send("msg11");
  }
  public void reset() {
    switch (event) {
      case EV577:
        try {
          new S2();
          send("msg16");
          new S14();
          if (x7 > 0) {
            new S95();
          }
        } finally {
          try {
            new S94();
            new S45();
            send("msg11");
            new S71();
          } catch (TimeoutException e) {
            send("msg8");
            send("msg18");
          } finally {
            new S95();
            new S55();
            send("msg13");
            send("msg8");
          }
        }
        new S19();
        send("msg3");
        break;
      case EV578:
        send("msg6");
        break;
      case EV579:
        send("msg10");
        new S10();
        new S15();
        break;
    }
    send("msg10");
    try {
      new S60();
      new Helper();
      new S50();
    } catch (IllegalStateException e) {
      new S16();
      try {
        switch (event) {
          case EV580:
            send("msg5");
            break;
          case EV581:
            new S83();
            log("note");
            new S2();
            break;
        }
        if (x1 > 0) {
          new S21();
          send("msg19");
          send("msg14");
        }
        try {
          new State();
          log("note");
          send("msg13");
          new S18();
        } finally {
          new S21();
          new S16();
        }
        if (x9 > 0) {
          new S80();
        }
      } finally {
        switch (event) {
          case EV582:
            log("note");
            send("msg8");
            new S27();
            new S16();
            break;
          case EV583:
            send("msg18");
            new S64();
            new S69();
            break;
        }
        if (x3 > 0) {
          send("msg2");
        } else {
          log("note");
          new S30();
        }
      }
      log("note");
      send("msg3");
    }
  }
  void open() {
    log("note");
  }
  void close() {
    switch (event) {
      case EV584:
        try {
          new S23();
        } catch (IOException e) {
          new S4();
          new S9();
        } catch (IOException e) {
          new S62();
        }
        break;
      case EV585:
        send("msg12");
        try {
          try {
            new S65();
            new S43();
            new S64();
          } catch (TimeoutException e) {
            new S74();
            send("msg11");
            new S72();
            new S30();
          } finally {
            new S33();
            new Helper();
            send("msg5");
            log("note");
          }
        } finally {
          if (x2 > 0) {
            new State();
            new State();
          }
          new S59();
          new S65();
        }
        send("msg16");
        new Helper();
        break;
    }
  }
  void start() {
    new S85();
    new S90();
  }
  void stop() {
    new S78();
  }
  void pause() {
    try {
      new S23();
    } catch (IllegalStateException e) {
      new S94();
      send("msg13");
    } catch (IOException e) {
      send("msg9");
    }
    new S65();
  }
}
