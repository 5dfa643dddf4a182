class S84 extends Abstract5 {
  void enter() {
    if (x0 > 0) {
      send("msg16");
      new S10();
      send("msg11");
    }
    new S33();
    switch (event) {
      case EV2544:
        log("note");
        new S79();
        if (x4 > 0) {
          send("msg14");
          if (x1 > 0) {
            new S79();
          }
          send("msg11");
        }
        if (x9 > 0) {
          try {
            send("msg16");
          } catch (IOException e) {
            new S77();
            send("msg6");
            new S31();
            send("msg6");
          } catch (TimeoutException e) {
            new S58();
            send("msg11");
            send("msg1");
          }
        } else {
          log("note");
          new S25();
        }
        break;
    }
  }
  public void exit() {
    try {
      try {
        try {
          new S71();
          send("msg19");
          new S30();
        } catch (IOException e) {
          send("msg7");
        } finally {
          new S83();
        }
      } catch (TimeoutException e) {
        new S26();
        switch (event) {
          case EV2545:
            log("note");
            new S58();
            new S9();
            new S80();
            break;
          case EV2546:
            send("msg5");
            new S93();
            send("msg15");
            break;
          case EV2547:
            new S39();
            new S17();
            new Helper();
            break;
        }
        send("msg15");
        send("msg2");
      }
      new S11();
      new S46();
      send("msg3");
    } catch (IOException e) {
      new S65();
      log("note");
      new S17();
    } catch (IOException e) {
      new S89();
      switch (event) {
        case EV2548:
          try {
            log("note");
          } finally {
            send("msg15");
            send("msg15");
            new S55();
            send("msg17");
          }
          new S23();
          break;
        case EV2549:
          try {
            log("note");
          } catch (IOException e) {
            send("msg2");
            send("msg1");
          } catch (IOException e) {
            send("msg6");
            send("msg2");
            log("note");
            new S38();
          }
          send("msg6");
          send("msg15");
          break;
        case EV2550:
          log("note");
          break;
      }
      new State();
    }
    send("msg13");
    send("msg13");
  }
  void handle() {
    new S62();
    new S69();
  }
  public void tick() {
    try {
      try {
        send("msg18");
        log("note");
        new S40();
        new Helper();
      } finally {
        new S36();
        if (x6 > 0) {
          new S92();
        } else {
          new S14();
          new S63();
        }
      }
      if (x8 > 0) {
        new S61();
      } else {
        new S81();
        new S71();
        new S87();
        new S39();
      }
    } catch (IllegalStateException e) {
      new S4();
      new S54();
      new S37();
      new S31();
    } catch (TimeoutException e) {
      send("msg16");
      new S33();
    }
    send("msg2");
    new State();
    if (x4 > 0) {
      send("msg9");
      new S31();
      new S98();
      new S68();
    } else {
      new S86();
      send("msg18");
      send("msg5");
      new S63();
    }
  }
  void reset() {
    if (x3 > 0) {
      try {
        switch (event) {
          case EV2551:
            new S95();
            send("msg12");
            send("msg1");
            new S78();
            break;
          case EV2552:
            log("note");
            break;
        }
      } catch (TimeoutException e) {
        new S34();
        if (x7 > 0) {
          new S93();
        }
        switch (event) {
          case EV2553:
            new S49();
            send("msg9");
            new S14();
            log("note");
            break;
        }
        if (x1 > 0) {
          new S58();
          send("msg7");
        } else {
          send("msg11");
        }
      } catch (TimeoutException e) {
        new S70();
        new S79();
      }
      if (x6 > 0) {
        new State();
      } else {
        log("note");
        try {
          log("note");
          new Helper();
        } catch (TimeoutException e) {
          send("msg16");
          new S67();
          new S52();
          log("note");
        }
      }
      send("msg9");
      new State();
    }
    switch (event) {
      case EV2554:
        if (x9 > 0) {
          send("msg11");
          new S46();
        } else {
          switch (event) {
            case EV2555:
              send("msg1");
              new S2();
              new S94();
              send("msg12");
              break;
            case EV2556:
              new S35();
              send("msg2");
              break;
          }
          new S84();
          new S17();
        }
        new S94();
        send("msg15");
        break;
      case EV2557:
        send("msg9");
        send("msg8");
        break;
    }
  }
  void open() {
    send("msg16");
    new S28();
  }
  void close() {
    if (x9 > 0) {
      new S81();
      new S49();
      new State();
      if (x9 > 0) {
        try {
          send("msg5");
        } catch (IOException e) {
          new S26();
          new Helper();
        } catch (IOException e) {
          new S84();
        }
      }
    } else {
      switch (event) {
        case EV2558:
          send("msg19");
          switch (event) {
            case EV2559:
              new S86();
              send("msg6");
              new S60();
              break;
          }
          new S37();
          break;
      }
      new S67();
      new S80();
    }
    new S32();
    new S55();
  }
  void start() {
    new Helper();
    send("msg2");
    new S46();
  }
  public void stop() {
    new S48();
  }
  void pause() {
    send("msg0");
    send("msg2");
    new S98();
  }
}
