class S29 extends Abstract4 {
  void enter() {
    send("msg7");
    new S88();
    try {
      new S85();
    } catch (TimeoutException e) {
      new S63();
      new S15();
      new S77();
      try {
        switch (event) {
          case EV846:
            new S6();
            new S4();
            log("note");
            new S22();
            break;
        }
      } catch (TimeoutException e) {
        send("msg13");
      } finally {
        try {
          send("msg11");
        } catch (TimeoutException e) {
          send("msg5");
        } catch (IOException e) {
          new S66();
          send("msg6");
          send("msg19");
        }
      }
    } finally {
      new S79();
      if (x7 > 0) {
        switch (event) {
          case EV847:
            new S75();
            break;
          case EV848:
            new S99();
            new S67();
            break;
        }
        new S36();
        new S81();
      }
      new S98();
      send("msg10");
    }
  }
  void exit() {
    new S85();
    if (x9 > 0) {
      try {
        switch (event) {
          case EV849:
            new S83();
            new S77();
            send("msg13");
            break;
          case EV850:
            log("note");
            send("msg13");
            break;
          case EV851:
            send("msg6");
            break;
        }
      } catch (IOException e) {
        send("msg13");
      } finally {
        if (x8 > 0) {
          new S81();
        }
        try {
          new State();
          new S98();
        } catch (IllegalStateException e) {
          new S46();
        }
        send("msg10");
      }
      send("msg4");
      new S55();
      if (x0 > 0) {
        try {
          send("msg6");
        } catch (TimeoutException e) {
          new S72();
          log("note");
        } catch (IOException e) {
          send("msg12");
          new S76();
        }
        send("msg10");
        new S88();
        send("msg14");
      } else {
        send("msg19");
        new S93();
        if (x6 > 0) {
          new S26();
          new S58();
          log("note");
        }
      }
    } else {
      new S69();
      send("msg6");
    }
    new S100();
    new S22();
  }
  void handle() {
    log("note");
    switch (event) {
      case EV852:
        new S89();
        break;
    }
  }
  void tick() {
    new S38();
    new S31();
  }
  void reset() {
    try {
      if (x5 > 0) {
        new Helper();
        try {
          new S83();
        } catch (IOException e) {
          send("msg18");
          send("msg7");
          new S64();
          log("note");
        }
      } else {
        new S97();
        log("note");
      }
      send("msg5");
      new S83();
    } finally {
      new S85();
      if (x2 > 0) {
        try {
          new S37();
          send("msg18");
          log("note");
        } catch (TimeoutException e) {
          send("msg17");
          new S1();
          send("msg0");
        }
        new S59();
        send("msg5");
      }
    }
  }
  void open() {
    new S74();
    send("msg5");
    send("msg9");
    if (x2 > 0) {
      new S79();
      log("note");
    }
  }
  void close() {
    try {
      send("msg3");
      try {
        new Helper();
        new S28();
        send("msg12");
      } catch (TimeoutException e) {
        if (x4 > 0) {
          new S8();
        }
        log("note");
        send("msg6");
      } catch (TimeoutException e) {
        new S77();
        try {
          new S32();
        } finally {
          send("msg11");
        }
        try {
          send("msg1");
          new S16();
          new S40();
          new S5();
        } catch (IOException e) {
          new Helper();
        } finally {
          send("msg18");
          new S24();
        }
      }
    } catch (TimeoutException e) {
      send("msg0");
      log("note");
    }
    new S71();
  }
  public void start() {
    send("msg1");
    send("msg4");
    log("note");
  }
  public void stop() {
    send("msg1");
    send("msg14");
    log("note");
    log("note");
  }
  public void pause() {
    new S98();
    new S45();
  }
}
