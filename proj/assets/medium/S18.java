class S18 extends Abstract1 {
  void enter() {
    new S22();
    switch (event) {
      case EV273:
        new S17();
        if (x1 > 0) {
          new S8();
          if (x2 > 0) {
            send("msg17");
            send("msg11");
            send("msg19");
            send("msg3");
          } else {
            new S15();
            new S30();
            new S28();
            new S20();
          }
          if (x8 > 0) {
            send("msg3");
            new S7();
            new S21();
            send("msg2");
          } else {
            send("msg3");
          }
        } else {
          send("msg18");
          new State();
          switch (event) {
            case EV274:
              send("msg12");
              break;
            case EV275:
              new S21();
              send("msg10");
              break;
          }
          if (x5 > 0) {
            send("msg2");
            new S27();
            new S6();
            new S11();
          } else {
            send("msg4");
            new S20();
            new S16();
          }
        }
        new S23();
        switch (event) {
          case EV276:
            send("msg8");
            switch (event) {
              case EV277:
                new S2();
                send("msg11");
                new S8();
                break;
            }
            break;
        }
        break;
      case EV278:
        new S20();
        if (x9 > 0) {
          new S7();
          send("msg4");
          try {
            new S19();
            new S9();
            send("msg17");
          } catch (IOException e) {
            new S10();
          } catch (TimeoutException e) {
            send("msg14");
            new S7();
            new S25();
          }
          send("msg6");
        } else {
          log("note");
          switch (event) {
            case EV279:
              new S14();
              new S12();
              break;
            case EV280:
              new S16();
              new S29();
              send("msg14");
              send("msg1");
              break;
          }
          send("msg7");
          new S28();
        }
        break;
    }
    if (x9 > 0) {
      switch (event) {
        case EV281:
          send("msg10");
          new S24();
          switch (event) {
            case EV282:
              new S28();
              new S24();
              break;
          }
          break;
        case EV283:
          log("note");
          new S16();
          send("msg10");
          break;
        case EV284:
          new S6();
          new S11();
          new S4();
          break;
      }
      switch (event) {
        case EV285:
          send("msg10");
          log("note");
          break;
      }
    } else {
      send("msg13");
    }
    send("msg15");
  }
  void exit() {
    new S9();
  }
  void handle() {
    new State();
    send("msg10");
  }
  void tick() {
    new S9();
  }
  void reset() {
    send("msg7");
  }
}
