class S1 extends Abstract6 {
  void enter() {
    try {
      new S20();
      try {
        send("msg8");
      } catch (IOException e) {
        new State();
        new S25();
        log("note");
        switch (event) {
          case EV1:
            new S27();
            break;
          case EV2:
            new S22();
            send("msg12");
            new S16();
            new S28();
            break;
          case EV3:
            new S24();
            send("msg19");
            new S23();
            send("msg15");
            break;
        }
      } catch (IllegalStateException e) {
        switch (event) {
          case EV4:
            log("note");
            new S23();
            break;
          case EV5:
            new S19();
            break;
          case EV6:
            send("msg2");
            new State();
            send("msg18");
            new S12();
            break;
        }
        if (x7 > 0) {
          send("msg18");
          new S28();
          new S22();
        } else {
          new S4();
          new S4();
          new S28();
          new S9();
        }
        new S6();
        new S7();
      }
      try {
        send("msg15");
        new State();
        try {
          new S18();
        } catch (TimeoutException e) {
          new S20();
          new S24();
          send("msg18");
          new S23();
        }
        new S25();
      } finally {
        send("msg4");
        send("msg4");
        send("msg4");
        new S13();
      }
      if (x4 > 0) {
        try {
          new S19();
          new S11();
          new S22();
        } catch (IOException e) {
          new S8();
          new S23();
          send("msg5");
        } catch (TimeoutException e) {
          send("msg7");
        }
        send("msg3");
        if (x2 > 0) {
          new S19();
          new S11();
        }
        new S26();
      }
    } catch (IOException e) {
      new S23();
      send("msg2");
    }
  }
  void exit() {
    send("msg1");
    send("msg16");
  }
  void handle() {
    send("msg15");
    log("note");
  }
  void tick() {
    new S3();
  }
  public void reset() {
    try {
      switch (event) {
        case EV7:
          send("msg2");
          new S23();
          send("msg3");
          new Helper();
          break;
      }
      new S12();
      send("msg7");
      if (x6 > 0) {
        try {
          new S26();
        } catch (TimeoutException e) {
          log("note");
        } finally {
          log("note");
        }
        try {
          new S13();
        } catch (IOException e) {
          new S16();
        }
        if (x6 > 0) {
          new S25();
          new S2();
          new S21();
          new S3();
        } else {
          new S7();
          send("msg13");
        }
      } else {
        send("msg13");
        new S22();
      }
    } catch (IOException e) {
      new S27();
      new S2();
      switch (event) {
        case EV8:
          send("msg11");
          log("note");
          break;
        case EV9:
          switch (event) {
            case EV10:
              new S4();
              log("note");
              new S5();
              break;
          }
          new S23();
          switch (event) {
            case EV11:
              send("msg16");
              log("note");
              send("msg2");
              send("msg3");
              break;
          }
          try {
            new S8();
            new S29();
            new S15();
            new S12();
          } catch (TimeoutException e) {
            log("note");
            new State();
          }
          break;
      }
      send("msg6");
    }
    send("msg17");
  }
}
