class S30 extends Abstract11 {
  void enter() {
    log("note");
  }
  public void exit() {
    try {
      if (x0 > 0) {
        switch (event) {
          case EV853:
            new S90();
            break;
        }
      } else {
        new S55();
        try {
          send("msg5");
          new S68();
        } finally {
          new S99();
          new S71();
          send("msg3");
        }
        log("note");
      }
    } catch (IOException e) {
      new S37();
      send("msg4");
      new S51();
      try {
        new S11();
      } catch (IOException e) {
        if (x0 > 0) {
          send("msg10");
          new S11();
          new S100();
          send("msg16");
        } else {
          new S99();
          new S12();
        }
        if (x9 > 0) {
          send("msg19");
          log("note");
        } else {
          new S67();
          new S53();
          new S22();
        }
        try {
          new S79();
        } catch (TimeoutException e) {
          send("msg15");
          send("msg1");
          new S6();
        } finally {
          new S38();
          send("msg15");
          send("msg5");
        }
      } catch (TimeoutException e) {
        new S77();
        new S88();
      }
    } finally {
      try {
        if (x1 > 0) {
          log("note");
        }
        try {
          new S4();
        } catch (IOException e) {
          new S36();
          log("note");
          send("msg1");
        }
        log("note");
      } catch (IOException e) {
        send("msg16");
        new Helper();
      }
      if (x6 > 0) {
        new S88();
        if (x5 > 0) {
          new S50();
          new S86();
          send("msg14");
        }
        new S68();
        new S48();
      }
    }
    new S16();
  }
  public void handle() {
    new S92();
    try {
      if (x2 > 0) {
        send("msg0");
        new S74();
      } else {
        send("msg7");
        new S84();
      }
    } finally {
      new S94();
    }
  }
  void tick() {
    new State();
    new S7();
  }
  public void reset() {
    switch (event) {
      case EV854:
        log("note");
        send("msg2");
        break;
    }
    if (x8 > 0) {
      try {
        log("note");
        if (x5 > 0) {
          send("msg9");
        } else {
          new S44();
          send("msg0");
        }
        new S38();
        log("note");
      } catch (IOException e) {
        log("note");
      } finally {
        if (x1 > 0) {
          send("msg12");
          send("msg15");
          new S20();
          send("msg11");
        }
        log("note");
        new S97();
      }
      send("msg17");
      try {
        new S10();
        new S78();
        new S38();
        switch (event) {
          case EV855:
            new S43();
            send("msg0");
            send("msg4");
            break;
        }
      } catch (IllegalStateException e) {
        log("note");
        new S87();
      }
    } else {
      switch (event) {
        case EV856:
          new S63();
          switch (event) {
            case EV857:
              new S38();
              send("msg2");
              new S26();
              send("msg14");
              break;
            case EV858:
              new S9();
              new S63();
              send("msg13");
              break;
            case EV859:
              send("msg2");
              new S50();
              new S5();
              break;
          }
          if (x4 > 0) {
            new S72();
          } else {
            new S67();
            send("msg10");
            new State();
            send("msg12");
          }
          break;
      }
      new S48();
      new S11();
    }
  }
  void open() {
    send("msg3");
    log("note");
    new S57();
  }
  public void close() {
    send("msg4");
    new S20();
    send("msg12");
  }
  void start() {
    new S43();
    send("msg1");
    new S86();
    new S96();
  }
  void stop() {
    send("msg12");
    try {
      if (x2 > 0) {
        switch (event) {
          case EV860:
            send("msg12");
            new S63();
            send("msg8");
            new S18();
            break;
          case EV861:
            send("msg3");
            new Helper();
            break;
        }
        log("note");
        if (x2 > 0) {
          log("note");
          log("note");
          new S22();
          new S37();
        }
      }
    } finally {
      new S7();
    }
  }
  public void pause() {
    send("msg11");
    send("msg10");
    if (x2 > 0) {
      new S10();
      new S14();
    }
    log("note");
  }
}
