class S28 extends State {
  public void enter() {
    try {
      new State();
    } finally {
      send("msg10");
      try {
        send("msg5");
        new S9();
      } catch (IllegalStateException e) {
        switch (event) {
          case EV500:
            new S22();
            break;
        }
      } catch (IllegalStateException e) {
        try {
          send("msg15");
          new S13();
          send("msg0");
          new S6();
        } catch (IllegalStateException e) {
          new S10();
          send("msg15");
          new S29();
        } catch (TimeoutException e) {
          new S14();
          new S12();
          send("msg2");
          send("msg10");
        }
        new S5();
      }
      send("msg17");
      try {
        new S11();
        new S14();
        send("msg10");
        new S15();
      } finally {
        log("note");
      }
    }
    send("msg11");
    try {
      new S7();
    } finally {
      send("msg7");
      if (x1 > 0) {
        new S4();
        send("msg0");
      }
      new S14();
    }
  }
  void exit() {
    new S14();
    if (x4 > 0) {
      try {
        if (x1 > 0) {
          new S3();
          send("msg6");
          new S3();
          send("msg16");
        } else {
          send("msg10");
          new S21();
          send("msg3");
          new S19();
        }
      } catch (IllegalStateException e) {
        try {
          new State();
          new S14();
          new State();
        } catch (TimeoutException e) {
          send("msg2");
          new S12();
          new S13();
          new S23();
        } finally {
          new S18();
          log("note");
        }
        switch (event) {
          case EV501:
            new S10();
            log("note");
            send("msg1");
            new S21();
            break;
        }
        if (x6 > 0) {
          log("note");
          send("msg17");
        }
        send("msg1");
      } catch (TimeoutException e) {
        new S25();
        new S30();
        send("msg9");
        new S22();
      }
      if (x3 > 0) {
        send("msg3");
        new S14();
        new S21();
      }
      new S19();
      if (x8 > 0) {
        new S30();
        new S22();
      } else {
        send("msg8");
        switch (event) {
          case EV502:
            send("msg16");
            new S22();
            break;
          case EV503:
            new S8();
            log("note");
            new S27();
            new S3();
            break;
          case EV504:
            new S9();
            send("msg6");
            send("msg4");
            break;
        }
        if (x2 > 0) {
          log("note");
          send("msg10");
          new S2();
          new S20();
        }
        switch (event) {
          case EV505:
            send("msg8");
            break;
          case EV506:
            send("msg19");
            break;
          case EV507:
            new S27();
            log("note");
            new S23();
            log("note");
            break;
        }
      }
    }
    try {
      if (x0 > 0) {
        new S4();
        log("note");
        log("note");
        new S4();
      } else {
        new S7();
      }
      new S25();
      switch (event) {
        case EV508:
          new S22();
          new S23();
          new S3();
          break;
      }
      switch (event) {
        case EV509:
          switch (event) {
            case EV510:
              new S20();
              break;
          }
          new S14();
          break;
        case EV511:
          new S15();
          break;
      }
    } catch (IllegalStateException e) {
      if (x2 > 0) {
        send("msg5");
        switch (event) {
          case EV512:
            new S30();
            new S25();
            send("msg7");
            break;
        }
      }
      try {
        new S22();
        try {
          send("msg11");
          new S5();
          send("msg18");
        } catch (IllegalStateException e) {
          send("msg17");
          new S25();
        } finally {
          new Helper();
          new S9();
          new S6();
        }
        try {
          new S8();
          new S29();
        } catch (TimeoutException e) {
          log("note");
        }
      } catch (TimeoutException e) {
        log("note");
      } finally {
        send("msg0");
        send("msg11");
        new S7();
      }
      new S28();
      switch (event) {
        case EV513:
          new Helper();
          send("msg5");
          switch (event) {
            case EV514:
              new S24();
              break;
            case EV515:
              new S6();
              break;
          }
          break;
      }
    } catch (IOException e) {
      new S5();
    }
    send("msg14");
  }
  void handle() {
    send("msg18");
    new S12();
  }
  void tick() {
    switch (event) {
      case EV516:
        new S30();
        break;
    }
  }
  void reset() {
    switch (event) {
      case EV517:
        send("msg15");
        new S7();
        send("msg18");
        new State();
        break;
    }
    if (x0 > 0) {
      try {
        send("msg17");
      } catch (TimeoutException e) {
        if (x2 > 0) {
          new Helper();
          send("msg19");
          new Helper();
          new S27();
        } else {
          send("msg13");
          new Helper();
          send("msg2");
          send("msg16");
        }
      }
      switch (event) {
        case EV518:
          log("note");
          try {
            send("msg6");
            log("note");
            send("msg3");
            new S14();
          } catch (TimeoutException e) {
            new S3();
          }
          send("msg0");
          new S25();
          break;
      }
      new S18();
      new S4();
    } else {
      new S27();
      if (x2 > 0) {
        try {
          send("msg16");
          new S19();
          new S15();
        } catch (IllegalStateException e) {
          new S29();
          send("msg5");
          send("msg3");
        } finally {
          new State();
          new S6();
          new S24();
          new S1();
        }
        new S16();
        new S20();
        new S15();
      } else {
        send("msg5");
        if (x5 > 0) {
          send("msg7");
          new S14();
          send("msg6");
        }
      }
      new S13();
      send("msg15");
    }
    try {
      send("msg9");
      new S15();
      new S28();
    } finally {
      send("msg9");
      send("msg11");
      switch (event) {
        case EV519:
          new State();
          send("msg2");
          new S17();
          break;
        case EV520:
          try {
            new S19();
            send("msg6");
            new S11();
            new S16();
          } catch (IllegalStateException e) {
            send("msg12");
          }
          new S9();
          try {
            log("note");
            new State();
          } catch (TimeoutException e) {
            new S17();
            new S3();
          }
          break;
      }
    }
    new S20();
  }
}
