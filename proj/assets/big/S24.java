class S24 extends Abstract16 {
  void enter() {
    send("msg11");
    send("msg14");
  }
  void exit() {
    send("msg18");
    send("msg7");
    if (x8 > 0) {
      send("msg17");
      new S25();
    }
  }
  void handle() {
    send("msg15");
    new S29();
    new S45();
  }
  void tick() {
    new State();
    switch (event) {
      case EV714:
        send("msg14");
        new S78();
        break;
      case EV715:
        new S52();
        new State();
        break;
      case EV716:
        new S90();
        send("msg3");
        send("msg9");
        break;
    }
  }
  public void reset() {
    try {
      send("msg6");
      if (x3 > 0) {
        new S4();
        try {
          send("msg0");
          new S85();
          new S27();
          new S73();
        } catch (IOException e) {
          new S65();
          new S10();
          new S14();
          send("msg13");
        } catch (IllegalStateException e) {
          send("msg0");
          new S20();
          new S73();
          log("note");
        }
        try {
          send("msg18");
          new Helper();
          new S81();
          new State();
        } catch (IllegalStateException e) {
          new S85();
          send("msg11");
          new S51();
          new S61();
        } finally {
          log("note");
          new S75();
        }
      } else {
        if (x7 > 0) {
          new S98();
          send("msg15");
        } else {
          new S24();
          send("msg15");
          send("msg15");
        }
      }
    } catch (TimeoutException e) {
      try {
        new Helper();
        send("msg5");
        send("msg9");
        switch (event) {
          case EV717:
            new S81();
            send("msg18");
            new S95();
            break;
        }
      } catch (IllegalStateException e) {
        new S17();
      } finally {
        try {
          send("msg11");
          new S13();
        } catch (IOException e) {
          send("msg10");
          send("msg18");
          new S79();
          log("note");
        } catch (IOException e) {
          new S22();
        }
      }
      new S46();
      log("note");
      try {
        switch (event) {
          case EV718:
            new S55();
            break;
          case EV719:
            send("msg11");
            break;
          case EV720:
            new Helper();
            break;
        }
        log("note");
        new S4();
      } catch (IOException e) {
        send("msg0");
      }
    } catch (IOException e) {
      if (x0 > 0) {
        send("msg16");
        new S8();
        if (x0 > 0) {
          new S25();
          new S85();
        }
        new S100();
      } else {
        try {
          new S9();
          send("msg1");
        } catch (IOException e) {
          log("note");
          new S80();
          send("msg5");
        } catch (IOException e) {
          new S54();
        }
      }
      send("msg3");
      send("msg15");
      send("msg15");
    }
    new S98();
    send("msg9");
  }
  void open() {
    log("note");
  }
  void close() {
    new S32();
    send("msg14");
  }
  void start() {
    if (x2 > 0) {
      switch (event) {
        case EV721:
          new S40();
          new S8();
          if (x0 > 0) {
            send("msg8");
            send("msg4");
            new S62();
          }
          new S35();
          break;
        case EV722:
          log("note");
          new S29();
          break;
        case EV723:
          send("msg17");
          send("msg19");
          break;
      }
      new State();
    } else {
      send("msg5");
    }
    new S6();
    if (x8 > 0) {
      try {
        switch (event) {
          case EV724:
            new S67();
            new S8();
            break;
        }
        switch (event) {
          case EV725:
            send("msg15");
            new S52();
            break;
        }
      } catch (IllegalStateException e) {
        new S1();
        try {
          log("note");
          send("msg8");
          send("msg5");
        } catch (IllegalStateException e) {
          new Helper();
        } finally {
          new S18();
        }
      } catch (TimeoutException e) {
        switch (event) {
          case EV726:
            new S47();
            new S77();
            new S81();
            send("msg10");
            break;
        }
        send("msg6");
      }
      send("msg10");
      send("msg8");
    }
    log("note");
  }
  public void stop() {
    new S45();
    log("note");
    new S40();
  }
  public void pause() {
    new S30();
  }
}
