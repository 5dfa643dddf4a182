class S90 extends State {
  void enter() {
    try {
      try {
        send("msg8");
        switch (event) {
          case EV2764:
            new S31();
            send("msg16");
            new State();
            log("note");
            break;
        }
      } finally {
        log("note");
        log("note");
        new S95();
      }
      new S53();
      new S99();
    } finally {
      new S92();
    }
    new S86();
  }
  void exit() {
    send("msg7");
    log("note");
    try {
      new S45();
      send("msg6");
    } catch (TimeoutException e) {
      try {
        try {
          send("msg15");
          new S73();
          new State();
        } catch (IOException e) {
          new S82();
          new State();
        } catch (IllegalStateException e) {
          log("note");
        }
      } catch (IllegalStateException e) {
        new S59();
      }
      new S2();
    } finally {
      log("note");
      log("note");
      send("msg19");
    }
    if (x4 > 0) {
      new S91();
      new S22();
      send("msg1");
    } else {
      log("note");
      new S36();
      new S34();
      new S59();
    }
  }
  void handle() {
    if (x1 > 0) {
      send("msg4");
      try {
        switch (event) {
          case EV2765:
            send("msg15");
            break;
          case EV2766:
            log("note");
            new S79();
            send("msg12");
            send("msg17");
            break;
          case EV2767:
            log("note");
            new S38();
            send("msg16");
            send("msg17");
            break;
        }
      } catch (IllegalStateException e) {
        new S80();
        send("msg14");
        try {
          new Helper();
          send("msg3");
          log("note");
        } catch (IllegalStateException e) {
          new S99();
          new S22();
          new S58();
        } catch (IllegalStateException e) {
          send("msg0");
          log("note");
          new State();
          new S21();
        }
      } catch (TimeoutException e) {
        send("msg18");
        new S76();
      }
    }
  }
  public void tick() {
    send("msg2");
    send("msg14");
  }
  void reset() {
    new S26();
    send("msg18");
    if (x5 > 0) {
      if (x1 > 0) {
        try {
          new S59();
        } catch (IOException e) {
          send("msg8");
          send("msg19");
          send("msg8");
        } catch (IOException e) {
          new S68();
        }
        log("note");
      } else {
        new S76();
        switch (event) {
          case EV2768:
            new S95();
            send("msg11");
            log("note");
            send("msg9");
            break;
          case EV2769:
            send("msg18");
            send("msg19");
            new S22();
            break;
        }
      }
    }
    log("note");
  }
  void open() {
    switch (event) {
      case EV2770:
        log("note");
        send("msg11");
        break;
      case EV2771:
        new S39();
        break;
    }
  }
  void close() {
    send("msg0");
    new State();
    new S9();
    new S58();
  }
  public void start() {
    if (x9 > 0) {
      switch (event) {
        case EV2772:
          send("msg17");
          new S20();
          try {
            new S29();
            new State();
            new S80();
          } catch (IOException e) {
            new S87();
            send("msg17");
            send("msg13");
          } catch (IOException e) {
            new S58();
            new S19();
          }
          switch (event) {
            case EV2773:
              send("msg1");
              send("msg7");
              new S36();
              new S96();
              break;
            case EV2774:
              new S3();
              send("msg7");
              new S39();
              break;
            case EV2775:
              send("msg13");
              break;
          }
          break;
      }
    }
    log("note");
  }
  void stop() {
    if (x1 > 0) {
      switch (event) {
        case EV2776:
          new S41();
          if (x6 > 0) {
            log("note");
          } else {
            new S94();
            send("msg5");
          }
          new S22();
          break;
      }
    }
    new S29();
    switch (event) {
      case EV2777:
        new Helper();
        break;
      case EV2778:
        send("msg11");
        break;
      case EV2779:
        send("msg15");
        try {
          send("msg9");
          send("msg18");
          new S10();
          new S24();
        } catch (IllegalStateException e) {
          new S7();
          switch (event) {
            case EV2780:
              new S92();
              new S20();
              break;
          }
          new S69();
          new S22();
        }
        new State();
        break;
    }
  }
  void pause() {
    log("note");
    send("msg7");
    new S47();
  }
}
