class S4 extends Abstract5 {
  void enter() {
    if (x8 > 0) {
      send("msg1");
      if (x5 > 0) {
        send("msg15");
      }
      send("msg5");
    }
    switch (event) {
      case EV51:
        if (x9 > 0) {
          try {
            send("msg17");
          } catch (IllegalStateException e) {
            new S27();
            new S22();
          } catch (IOException e) {
            new S9();
            new S8();
          }
        }
        try {
          send("msg1");
          new State();
        } catch (IOException e) {
          new S15();
          try {
            new S23();
          } catch (IOException e) {
            send("msg6");
            send("msg15");
            send("msg18");
          } catch (IOException e) {
            send("msg7");
            send("msg8");
            new S9();
          }
          log("note");
          new S4();
        } finally {
          try {
            new S1();
            send("msg12");
            send("msg5");
            send("msg3");
          } catch (IOException e) {
            new S9();
            send("msg6");
          }
          new S1();
          new S30();
          send("msg5");
        }
        new S1();
        break;
    }
    new S1();
    send("msg6");
  }
  void exit() {
    new State();
  }
  void handle() {
    if (x3 > 0) {
      try {
        new S16();
        new State();
        try {
          send("msg2");
          new S26();
          send("msg0");
          new S29();
        } catch (IllegalStateException e) {
          new S21();
        } catch (IllegalStateException e) {
          send("msg3");
          new S12();
          log("note");
        }
        send("msg13");
      } finally {
        send("msg5");
        new S7();
        log("note");
        try {
          send("msg12");
        } catch (IllegalStateException e) {
          send("msg14");
        }
      }
      new S8();
      send("msg5");
    }
    send("msg14");
    send("msg17");
  }
  void tick() {
    send("msg5");
    new S27();
    switch (event) {
      case EV52:
        send("msg16");
        if (x6 > 0) {
          send("msg0");
          send("msg18");
        }
        break;
      case EV53:
        log("note");
        if (x1 > 0) {
          try {
            new S18();
            new S14();
            send("msg12");
          } finally {
            send("msg0");
            send("msg10");
          }
          switch (event) {
            case EV54:
              send("msg19");
              break;
            case EV55:
              send("msg15");
              new S24();
              break;
          }
          new S24();
        }
        break;
    }
  }
  void reset() {
    log("note");
    new State();
    send("msg17");
  }
}
