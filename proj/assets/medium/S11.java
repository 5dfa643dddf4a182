class S11 extends Abstract3 {
  void enter() {
    if (x1 > 0) {
      new S29();
      send("msg8");
    }
    switch (event) {
      case EV181:
        if (x7 > 0) {
          new S19();
          try {
            new S17();
            new S16();
          } finally {
            send("msg14");
            new S28();
          }
        }
        if (x4 > 0) {
          new S16();
          if (x2 > 0) {
            send("msg10");
            send("msg1");
          }
          if (x2 > 0) {
            log("note");
          }
        }
        new S19();
        new State();
        break;
      case EV182:
        if (x2 > 0) {
          send("msg11");
          new S2();
          new S10();
          new S21();
        } else {
          send("msg3");
        }
        break;
      case EV183:
        new S9();
        send("msg14");
        new S9();
        send("msg10");
        break;
    }
    send("msg16");
    new S21();
  }
  public void exit() {
    new S10();
    if (x6 > 0) {
      new S6();
    }
    new S11();
    new S16();
  }
  void handle() {
    try {
      log("note");
      send("msg15");
      new S29();
      send("msg13");
    } catch (IllegalStateException e) {
      log("note");
      new S18();
      send("msg9");
      new S8();
    }
    try {
      new S25();
      switch (event) {
        case EV184:
          try {
            send("msg6");
            new S14();
            log("note");
            send("msg2");
          } finally {
            send("msg15");
            new S4();
            send("msg5");
            send("msg16");
          }
          send("msg8");
          break;
        case EV185:
          new S7();
          new S25();
          if (x6 > 0) {
            new S1();
            send("msg6");
            new S29();
            new S5();
          }
          send("msg1");
          break;
      }
      if (x5 > 0) {
        switch (event) {
          case EV186:
            new S28();
            break;
          case EV187:
            new S11();
            break;
        }
        send("msg1");
        switch (event) {
          case EV188:
            send("msg1");
            break;
          case EV189:
            new S6();
            new State();
            break;
        }
        new S11();
      }
      new S20();
    } catch (TimeoutException e) {
      send("msg2");
      new S28();
    }
  }
  void tick() {
    log("note");
    send("msg6");
    if (x8 > 0) {
      new S17();
      if (x6 > 0) {
        new S10();
        new S12();
        switch (event) {
          case EV190:
            new S26();
            send("msg7");
            send("msg8");
            new S4();
            break;
        }
        send("msg6");
      } else {
        switch (event) {
          case EV191:
            new S27();
            send("msg4");
            break;
        }
        new S20();
        log("note");
      }
      if (x9 > 0) {
        if (x6 > 0) {
          new S21();
          send("msg5");
        } else {
          new S7();
          new S25();
        }
        if (x9 > 0) {
          log("note");
          send("msg15");
          new S17();
        } else {
          new S14();
        }
      }
      new S29();
    }
  }
  public void reset() {
    if (x2 > 0) {
      new S4();
      switch (event) {
        case EV192:
          try {
            send("msg10");
          } catch (IllegalStateException e) {
            send("msg13");
          } catch (TimeoutException e) {
            new S7();
            new S30();
            new S9();
            new S7();
          }
          break;
        case EV193:
          new S27();
          break;
      }
      new S30();
      send("msg4");
    }
  }
}
