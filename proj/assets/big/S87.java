class S87 extends Abstract3 {
  void enter() {
    send("msg9");
    if (x0 > 0) {
      new S13();
    }
  }
  void exit() {
    log("note");
    if (x7 > 0) {
      send("msg16");
      switch (event) {
        case EV2647:
          send("msg15");
          log("note");
          break;
        case EV2648:
          try {
            new S72();
          } finally {
            send("msg9");
            send("msg2");
          }
          new S53();
          switch (event) {
            case EV2649:
              new S81();
              new S67();
              send("msg0");
              break;
            case EV2650:
              new S77();
              log("note");
              log("note");
              new S57();
              break;
            case EV2651:
              send("msg17");
              send("msg6");
              break;
          }
          break;
        case EV2652:
          switch (event) {
            case EV2653:
              new S5();
              send("msg8");
              new S74();
              log("note");
              break;
          }
          new S1();
          break;
      }
      new S57();
      send("msg8");
    } else {
      new S5();
      new S86();
    }
  }
  void handle() {
    send("msg16");
  }
  void tick() {
    send("msg15");
  }
  void reset() {
    try {
      switch (event) {
        case EV2654:
          if (x4 > 0) {
            send("msg18");
            new S35();
            log("note");
            send("msg2");
          }
          new S26();
          new S78();
          break;
        case EV2655:
          log("note");
          send("msg15");
          send("msg18");
          new S16();
          break;
      }
    } catch (IllegalStateException e) {
      new S61();
      send("msg16");
      if (x1 > 0) {
        new S66();
      } else {
        new S8();
        switch (event) {
          case EV2656:
            new S56();
            log("note");
            break;
        }
        log("note");
      }
    } finally {
      send("msg6");
      new S90();
    }
    if (x8 > 0) {
      new S33();
      send("msg15");
    } else {
      log("note");
      send("msg9");
      send("msg6");
      new S13();
    }
    new S29();
  }
  public void open() {
    send("msg4");
    log("note");
  }
  void close() {
    new S46();
    new S50();
  }
  void start() {
    new S81();
    new S59();
    try {
      new S100();
      log("note");
      switch (event) {
        case EV2657:
          send("msg16");
          try {
            new S33();
          } catch (IllegalStateException e) {
            send("msg16");
            send("msg17");
            log("note");
            new S35();
          }
          break;
      }
      log("note");
    } catch (TimeoutException e) {
      new S22();
      new S23();
    } catch (TimeoutException e) {
      log("note");
    }
  }
  public void stop() {
    new S28();
    send("msg5");
    if (x4 > 0) {
      send("msg19");
      log("note");
      try {
        new S72();
        send("msg11");
        new S46();
      } catch (TimeoutException e) {
        new S74();
        new S30();
      } finally {
        try {
          log("note");
          new S68();
          new S63();
          new S76();
        } catch (IllegalStateException e) {
          new S46();
          send("msg3");
          new S95();
          new S45();
        }
      }
    } else {
      try {
        send("msg9");
        log("note");
      } catch (IOException e) {
        switch (event) {
          case EV2658:
            send("msg18");
            log("note");
            break;
          case EV2659:
            new S52();
            break;
        }
      } catch (IOException e) {
        send("msg12");
      }
      new Helper();
      new S61();
    }
  }
  void pause() {
    new S52();
    send("msg13");
    switch (event) {
      case EV2660:
        send("msg9");
        try {
          send("msg0");
          new S10();
          new S68();
          try {
            new S26();
            new S99();
            send("msg5");
            new S4();
          } finally {
            send("msg12");
            log("note");
          }
        } finally {
          send("msg5");
          new State();
        }
        if (x3 > 0) {
          try {
            send("msg5");
          } catch (IllegalStateException e) {
            send("msg16");
            send("msg9");
          } catch (IOException e) {
            send("msg10");
            new S7();
            send("msg16");
          }
          new S89();
          new S24();
        } else {
          send("msg1");
          switch (event) {
            case EV2661:
              new S26();
              send("msg13");
              break;
            case EV2662:
              new S60();
              send("msg5");
              break;
            case EV2663:
              send("msg7");
              new S64();
              break;
          }
          new S56();
          try {
            new S12();
            log("note");
            log("note");
            new S1();
          } catch (IllegalStateException e) {
            send("msg7");
          } catch (TimeoutException e) {
            new State();
            new S67();
          }
        }
        log("note");
        break;
      case EV2664:
        new Helper();
        new S31();
        send("msg14");
        send("msg4");
        break;
      case EV2665:
        switch (event) {
          case EV2666:
            send("msg7");
            send("msg11");
            break;
        }
        break;
    }
  }
}
