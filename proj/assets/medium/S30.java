class S30 extends Abstract5 {
  public void enter() {
    new S12();
    new S14();
    new S28();
    if (x6 > 0) {
      if (x4 > 0) {
        new S29();
        if (x6 > 0) {
          send("msg3");
        }
        new S9();
      }
      if (x9 > 0) {
        log("note");
      } else {
        try {
          log("note");
        } catch (TimeoutException e) {
          send("msg9");
          send("msg0");
          log("note");
          send("msg9");
        }
        new S10();
        new S14();
      }
      try {
        new S30();
      } finally {
        log("note");
        switch (event) {
          case EV548:
            new S3();
            new S7();
            break;
          case EV549:
            log("note");
            send("msg4");
            break;
        }
      }
      if (x1 > 0) {
        new S25();
        send("msg17");
        new S28();
      }
    } else {
      try {
        switch (event) {
          case EV550:
            log("note");
            send("msg18");
            new S18();
            log("note");
            break;
          case EV551:
            send("msg0");
            send("msg6");
            break;
        }
      } finally {
        send("msg11");
      }
      send("msg19");
      switch (event) {
        case EV552:
          try {
            send("msg1");
            new S14();
            new S20();
          } catch (IOException e) {
            new S13();
            new S22();
            new S23();
            new S3();
          } catch (IllegalStateException e) {
            new S21();
            new State();
            new S23();
            log("note");
          }
          new S11();
          new S4();
          switch (event) {
            case EV553:
              log("note");
              new S15();
              log("note");
              break;
          }
          break;
        case EV554:
          new S16();
          break;
      }
    }
  }
  void exit() {
    if (x3 > 0) {
      send("msg3");
      switch (event) {
        case EV555:
          new S10();
          break;
      }
      new S23();
    }
    send("msg3");
  }
  void handle() {
    try {
      send("msg12");
      send("msg6");
    } catch (IllegalStateException e) {
      new S2();
    } catch (IOException e) {
      switch (event) {
        case EV556:
          log("note");
          new S22();
          send("msg14");
          break;
      }
      log("note");
    }
  }
  void tick() {
    send("msg1");
    if (x6 > 0) {
      try {
        new S1();
      } catch (IOException e) {
        new S19();
      }
      send("msg17");
      send("msg7");
      log("note");
    } else {
      new S11();
      if (x4 > 0) {
        try {
          log("note");
          new State();
          new S10();
          new S12();
        } catch (TimeoutException e) {
          new S25();
          new S6();
          new State();
          send("msg16");
        } catch (IOException e) {
          send("msg13");
          send("msg19");
          send("msg15");
          send("msg12");
        }
      } else {
        try {
          new Helper();
          new S7();
          new S11();
        } catch (IllegalStateException e) {
          send("msg17");
        } finally {
          new S23();
          new S28();
          send("msg3");
        }
        new S23();
        new S4();
        send("msg5");
      }
      log("note");
      new S22();
    }
    send("msg8");
    new S15();
  }
  void reset() {
    log("note");
  }
}
