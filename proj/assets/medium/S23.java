class S23 extends State {
  void enter() {
    new S24();
    new S30();
    if (x7 > 0) {
      new S17();
    }
    try {
      switch (event) {
        case EV383:
          new S26();
          break;
      }
      send("msg1");
    } finally {
      try {
        new S26();
        new S25();
      } finally {
        send("msg19");
        new S6();
        new S26();
      }
      new S22();
      new S1();
      if (x5 > 0) {
        new S18();
      } else {
        new S3();
      }
    }
  }
  public void exit() {
    send("msg14");
  }
  void handle() {
    try {
      log("note");
      send("msg10");
      if (x5 > 0) {
        send("msg17");
        try {
          new S14();
          send("msg0");
        } catch (IOException e) {
          send("msg12");
          send("msg3");
          send("msg14");
          new S11();
        } catch (IOException e) {
          send("msg5");
        }
        try {
          send("msg7");
          new S22();
          new S25();
          send("msg1");
        } catch (IllegalStateException e) {
          send("msg3");
          new S20();
          send("msg8");
        } catch (IOException e) {
          new S4();
          log("note");
          new S5();
          log("note");
        }
        new S18();
      } else {
        send("msg3");
        new S28();
        new S20();
        if (x1 > 0) {
          new S6();
          new S21();
          new Helper();
          send("msg3");
        } else {
          new Helper();
        }
      }
    } catch (TimeoutException e) {
      send("msg10");
      new S22();
    } finally {
      if (x4 > 0) {
        send("msg9");
        switch (event) {
          case EV384:
            new S1();
            break;
        }
        new S7();
      } else {
        if (x9 > 0) {
          new S12();
          send("msg0");
          send("msg19");
        }
        switch (event) {
          case EV385:
            send("msg6");
            send("msg4");
            new S10();
            new S5();
            break;
        }
        new S20();
      }
      send("msg7");
      new State();
    }
    new S6();
    if (x5 > 0) {
      try {
        new S27();
        new S28();
        switch (event) {
          case EV386:
            send("msg1");
            new S29();
            send("msg17");
            break;
          case EV387:
            send("msg15");
            new S5();
            send("msg14");
            break;
        }
      } finally {
        new S21();
        try {
          log("note");
          new S9();
        } catch (TimeoutException e) {
          send("msg15");
          send("msg2");
          send("msg10");
          new S18();
        } catch (IOException e) {
          send("msg5");
          new S5();
        }
        new S13();
        new S17();
      }
      switch (event) {
        case EV388:
          send("msg14");
          break;
        case EV389:
          new S18();
          break;
      }
    } else {
      send("msg0");
    }
  }
  void tick() {
    log("note");
    send("msg15");
  }
  public void reset() {
    send("msg0");
    new S4();
    send("msg7");
    switch (event) {
      case EV390:
        new S7();
        switch (event) {
          case EV391:
            new S11();
            new S10();
            break;
          case EV392:
            send("msg3");
            try {
              send("msg2");
              send("msg16");
              send("msg7");
              new S26();
            } catch (TimeoutException e) {
              send("msg13");
            } catch (IllegalStateException e) {
              log("note");
              send("msg12");
            }
            break;
          case EV393:
            if (x8 > 0) {
              new S28();
            }
            try {
              new S21();
            } catch (IllegalStateException e) {
              new S5();
            } catch (TimeoutException e) {
              send("msg19");
            }
            break;
        }
        send("msg8");
        if (x8 > 0) {
          send("msg19");
          send("msg19");
          new S26();
          try {
            new S3();
            log("note");
            send("msg16");
            new State();
          } finally {
            log("note");
            new S10();
          }
        } else {
          new S17();
          new S11();
          switch (event) {
            case EV394:
              send("msg17");
              new S12();
              break;
          }
        }
        break;
    }
  }
}
