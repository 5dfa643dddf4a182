class S29 extends State {
  public void enter() {
    new Helper();
    log("note");
    switch (event) {
      case EV521:
        try {
          send("msg6");
        } catch (TimeoutException e) {
          switch (event) {
            case EV522:
              send("msg14");
              new S3();
              new S19();
              new S15();
              break;
          }
        } finally {
          send("msg1");
          log("note");
          send("msg15");
          send("msg3");
        }
        break;
      case EV523:
        switch (event) {
          case EV524:
            send("msg16");
            try {
              new S27();
              log("note");
            } finally {
              send("msg18");
            }
            if (x5 > 0) {
              new S23();
              send("msg1");
            }
            new S9();
            break;
        }
        switch (event) {
          case EV525:
            send("msg7");
            break;
          case EV526:
            new S21();
            new S12();
            new S28();
            if (x4 > 0) {
              new State();
              send("msg1");
            } else {
              new S20();
              send("msg0");
              new S20();
              log("note");
            }
            break;
        }
        break;
    }
    if (x6 > 0) {
      new S23();
    }
  }
  void exit() {
    if (x5 > 0) {
      switch (event) {
        case EV527:
          send("msg0");
          send("msg10");
          break;
        case EV528:
          switch (event) {
            case EV529:
              new S1();
              new S5();
              new S11();
              send("msg15");
              break;
          }
          break;
        case EV530:
          log("note");
          new S28();
          break;
      }
      new S30();
      send("msg16");
      send("msg18");
    }
    new Helper();
    send("msg17");
  }
  public void handle() {
    if (x4 > 0) {
      switch (event) {
        case EV531:
          send("msg11");
          send("msg14");
          break;
        case EV532:
          switch (event) {
            case EV533:
              new S23();
              break;
            case EV534:
              send("msg18");
              send("msg19");
              send("msg17");
              new S7();
              break;
            case EV535:
              log("note");
              new S29();
              new S28();
              break;
          }
          break;
        case EV536:
          send("msg5");
          send("msg14");
          break;
      }
      try {
        log("note");
        send("msg2");
        try {
          send("msg19");
          send("msg5");
        } finally {
          send("msg12");
        }
      } catch (IllegalStateException e) {
        new S8();
        if (x2 > 0) {
          send("msg11");
        } else {
          send("msg17");
          new S8();
          new S22();
          new S18();
        }
        if (x4 > 0) {
          new S26();
          new State();
          new State();
        } else {
          new S28();
          log("note");
        }
        send("msg1");
      } finally {
        new S28();
        send("msg3");
        new S16();
        switch (event) {
          case EV537:
            new S18();
            send("msg15");
            new S16();
            new S9();
            break;
        }
      }
      try {
        switch (event) {
          case EV538:
            send("msg6");
            log("note");
            log("note");
            log("note");
            break;
          case EV539:
            new S29();
            send("msg4");
            break;
        }
        new S21();
        switch (event) {
          case EV540:
            new S25();
            new Helper();
            new S9();
            break;
          case EV541:
            new S21();
            send("msg8");
            send("msg1");
            break;
          case EV542:
            send("msg11");
            new S24();
            send("msg8");
            break;
        }
        try {
          new S27();
          new S7();
          new S7();
        } finally {
          send("msg11");
          send("msg4");
          new S1();
        }
      } catch (IllegalStateException e) {
        switch (event) {
          case EV543:
            new S2();
            break;
          case EV544:
            send("msg10");
            send("msg3");
            break;
        }
        send("msg11");
        new S29();
        new S25();
      } catch (TimeoutException e) {
        switch (event) {
          case EV545:
            new S5();
            new S12();
            log("note");
            break;
        }
        switch (event) {
          case EV546:
            new S13();
            new S17();
            new S30();
            send("msg18");
            break;
        }
        new S30();
        new S15();
      }
    }
    if (x8 > 0) {
      new S14();
      send("msg11");
    }
    switch (event) {
      case EV547:
        send("msg17");
        new State();
        new S24();
        break;
    }
  }
  public void tick() {
    new S4();
  }
  void reset() {
    send("msg16");
  }
}
