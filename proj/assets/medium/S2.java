class S2 extends Abstract5 {
  void enter() {
    new S28();
    log("note");
    send("msg0");
    send("msg3");
  }
  void exit() {
    log("note");
    new S7();
    switch (event) {
      case EV12:
        new S2();
        send("msg11");
        switch (event) {
          case EV13:
            send("msg8");
            switch (event) {
              case EV14:
                new S3();
                new S3();
                new S17();
                new S21();
                break;
            }
            log("note");
            break;
          case EV15:
            if (x1 > 0) {
              send("msg9");
              new S9();
              new S8();
              new S6();
            }
            break;
          case EV16:
            send("msg15");
            switch (event) {
              case EV17:
                new S1();
                new Helper();
                break;
            }
            break;
        }
        break;
      case EV18:
        try {
          new S16();
        } catch (IOException e) {
          new S10();
        } finally {
          new S2();
          switch (event) {
            case EV19:
              new S11();
              new S1();
              new S7();
              break;
          }
          log("note");
        }
        break;
    }
    new S27();
  }
  public void handle() {
    new S17();
    switch (event) {
      case EV20:
        send("msg18");
        switch (event) {
          case EV21:
            new S2();
            send("msg13");
            break;
          case EV22:
            send("msg0");
            switch (event) {
              case EV23:
                new S21();
                send("msg8");
                new S4();
                new S13();
                break;
              case EV24:
                send("msg19");
                new S16();
                break;
            }
            break;
        }
        send("msg2");
        break;
      case EV25:
        log("note");
        break;
    }
  }
  void tick() {
    switch (event) {
      case EV26:
        send("msg5");
        send("msg7");
        break;
    }
    switch (event) {
      case EV27:
        send("msg17");
        switch (event) {
          case EV28:
            switch (event) {
              case EV29:
                new S18();
                new S18();
                new S14();
                send("msg19");
                break;
              case EV30:
                send("msg1");
                send("msg18");
                new S20();
                break;
              case EV31:
                new S12();
                break;
            }
            break;
          case EV32:
            new S15();
            new S15();
            new S21();
            new S22();
            break;
        }
        send("msg0");
        new State();
        break;
      case EV33:
        new S20();
        break;
      case EV34:
        switch (event) {
          case EV35:
            send("msg6");
            send("msg8");
            send("msg17");
            break;
          case EV36:
            new S23();
            break;
          case EV37:
            send("msg2");
            break;
        }
        new S12();
        new S18();
        new S27();
        break;
    }
    try {
      send("msg15");
      switch (event) {
        case EV38:
          if (x9 > 0) {
            new S15();
            new S24();
            new S8();
          } else {
            new S28();
            new S10();
            send("msg5");
            new S28();
          }
          if (x7 > 0) {
            new S25();
            log("note");
            log("note");
            send("msg15");
          } else {
            send("msg15");
          }
          break;
        case EV39:
          if (x4 > 0) {
            new S3();
            send("msg16");
          } else {
            send("msg7");
            new S16();
            log("note");
          }
          new S23();
          switch (event) {
            case EV40:
              new S14();
              log("note");
              new S24();
              send("msg19");
              break;
          }
          break;
      }
    } finally {
      switch (event) {
        case EV41:
          send("msg11");
          send("msg5");
          switch (event) {
            case EV42:
              new S2();
              send("msg8");
              new S30();
              break;
            case EV43:
              new S8();
              send("msg15");
              new S28();
              new S13();
              break;
          }
          if (x7 > 0) {
            send("msg1");
            new S3();
            new S17();
            send("msg5");
          }
          break;
      }
    }
  }
  void reset() {
    switch (event) {
      case EV44:
        new S21();
        send("msg18");
        send("msg18");
        break;
      case EV45:
        send("msg5");
        if (x4 > 0) {
          try {
            new S30();
            new S5();
          } catch (IOException e) {
            send("msg7");
            log("note");
          }
          new S13();
          log("note");
        }
        break;
    }
    new S28();
    send("msg8");
    send("msg11");
  }
}
