class S6 extends Abstract2 {
  void enter() {
    send("msg10");
    new S28();
  }
  public void exit() {
    send("msg1");
    send("msg9");
  }
  void handle() {
    try {
      new S11();
    } catch (TimeoutException e) {
      send("msg13");
    }
  }
  void tick() {
    new Helper();
    try {
      new S25();
    } catch (TimeoutException e) {
      try {
        try {
          send("msg16");
        } catch (IllegalStateException e) {
          new S6();
          log("note");
          send("msg0");
          send("msg8");
        } finally {
          new S25();
          send("msg8");
          new S19();
          send("msg5");
        }
        send("msg10");
      } catch (IOException e) {
        new S16();
        send("msg12");
        try {
          send("msg14");
          log("note");
          new S25();
          new S14();
        } catch (IOException e) {
          new S4();
        } finally {
          send("msg7");
          new S18();
        }
      }
      if (x8 > 0) {
        try {
          new S11();
          send("msg16");
        } catch (IllegalStateException e) {
          log("note");
          send("msg0");
          new S14();
          send("msg10");
        } catch (TimeoutException e) {
          new S24();
          send("msg10");
        }
        try {
          new S28();
        } catch (TimeoutException e) {
          new S23();
          new S13();
          new S8();
          new Helper();
        }
      }
      if (x6 > 0) {
        send("msg0");
        try {
          new S3();
        } finally {
          send("msg5");
          new S9();
          new S22();
          send("msg4");
        }
      } else {
        send("msg13");
      }
      send("msg7");
    } catch (IOException e) {
      send("msg0");
      new S10();
    }
    if (x2 > 0) {
      if (x0 > 0) {
        send("msg2");
        switch (event) {
          case EV87:
            send("msg1");
            new S26();
            new S21();
            break;
          case EV88:
            new S20();
            send("msg15");
            break;
          case EV89:
            new S11();
            send("msg12");
            break;
        }
      }
      try {
        send("msg1");
      } catch (IllegalStateException e) {
        if (x1 > 0) {
          new S11();
        } else {
          new Helper();
          log("note");
          new S6();
          log("note");
        }
      } finally {
        new S7();
        new S27();
        try {
          new S7();
          new S25();
          send("msg16");
          log("note");
        } catch (IOException e) {
          new S20();
          new S23();
          new S5();
        } finally {
          new S30();
          new S14();
          new S7();
          new S13();
        }
      }
      send("msg16");
    }
  }
  void reset() {
    try {
      send("msg4");
      log("note");
    } catch (TimeoutException e) {
      new S20();
      send("msg2");
      new S14();
      send("msg15");
    } catch (TimeoutException e) {
      switch (event) {
        case EV90:
          send("msg15");
          break;
      }
      send("msg17");
      log("note");
    }
    new S22();
  }
}
