class S21 extends Abstract3 {
  public void enter() {
    send("msg3");
    new S12();
  }
  void exit() {
    log("note");
    if (x5 > 0) {
      try {
        try {
          log("note");
        } catch (IOException e) {
          send("msg18");
          send("msg7");
          new S17();
          send("msg8");
        }
        new S7();
        new S2();
        if (x6 > 0) {
          send("msg14");
          new S26();
          log("note");
        } else {
          new S14();
          new State();
          send("msg2");
        }
      } catch (IOException e) {
        new State();
      }
    } else {
      send("msg4");
      try {
        if (x5 > 0) {
          send("msg9");
          log("note");
          new S24();
        } else {
          new S9();
          new S13();
          send("msg10");
        }
        if (x9 > 0) {
          send("msg13");
          send("msg17");
          new S9();
          new S20();
        }
      } catch (IllegalStateException e) {
        new S7();
      } catch (IOException e) {
        send("msg6");
        new S12();
        new S22();
      }
    }
  }
  void handle() {
    switch (event) {
      case EV323:
        log("note");
        break;
      case EV324:
        if (x4 > 0) {
          new S12();
          if (x6 > 0) {
            new S15();
            log("note");
            new S24();
            new S29();
          }
        }
        new S27();
        switch (event) {
          case EV325:
            new S11();
            send("msg6");
            break;
          case EV326:
            new S8();
            send("msg12");
            if (x3 > 0) {
              send("msg13");
              log("note");
            } else {
              new S8();
            }
            log("note");
            break;
          case EV327:
            send("msg15");
            break;
        }
        new S12();
        break;
      case EV328:
        try {
          new S22();
          try {
            new S21();
            new S19();
          } catch (IllegalStateException e) {
            new S24();
          }
          new S30();
          if (x1 > 0) {
            send("msg12");
          }
        } catch (IOException e) {
          new S30();
          new S19();
          send("msg11");
        } catch (IllegalStateException e) {
          send("msg17");
          if (x2 > 0) {
            log("note");
            send("msg4");
            new S17();
            new S27();
          } else {
            new S13();
            send("msg9");
            new State();
            send("msg15");
          }
          try {
            new S14();
          } catch (IllegalStateException e) {
            new S18();
            send("msg0");
            new S23();
            new S3();
          }
        }
        send("msg1");
        new S17();
        if (x0 > 0) {
          new S2();
        } else {
          new S8();
          switch (event) {
            case EV329:
              send("msg0");
              new S22();
              send("msg18");
              break;
            case EV330:
              new S19();
              new S27();
              break;
          }
          send("msg2");
        }
        break;
    }
    new S16();
    send("msg16");
    send("msg12");
  }
  void tick() {
    send("msg12");
  }
  void reset() {
    new S15();
    new S12();
    send("msg19");
    switch (event) {
      case EV331:
        new S7();
        send("msg7");
        send("msg10");
        break;
      case EV332:
        send("msg12");
        new S22();
        new S27();
        break;
      case EV333:
        try {
          new S11();
          switch (event) {
            case EV334:
              new S16();
              break;
            case EV335:
              send("msg7");
              new S11();
              break;
          }
        } finally {
          send("msg8");
          if (x9 > 0) {
            send("msg16");
            new S27();
            new S26();
            send("msg0");
          } else {
            send("msg2");
            new S7();
            log("note");
            log("note");
          }
        }
        new S1();
        switch (event) {
          case EV336:
            if (x5 > 0) {
              new S3();
              send("msg12");
            }
            send("msg14");
            break;
          case EV337:
            send("msg9");
            switch (event) {
              case EV338:
                new S27();
                break;
              case EV339:
                send("msg6");
                send("msg19");
                new Helper();
                break;
            }
            send("msg11");
            new S24();
            break;
          case EV340:
            new S29();
            send("msg9");
            break;
        }
        new S5();
        break;
    }
  }
}
