class S68 extends Abstract4 {
  void enter() {
    log("note");
  }
  void exit() {
    send("msg5");
  }
  void handle() {
    send("msg2");
    send("msg16");
  }
  void tick() {
    send("msg10");
    new S30();
  }
  public void reset() {
    new S14();
    log("note");
    new Helper();
    new S77();
  }
  public void open() {
    new S7();
    send("msg1");
    try {
      new S11();
      send("msg1");
      new S72();
    } catch (IOException e) {
      log("note");
      if (x4 > 0) {
        if (x6 > 0) {
          new S36();
        }
        new S65();
      } else {
        send("msg12");
        try {
          new S13();
          new S100();
        } catch (IOException e) {
          send("msg19");
          new S53();
          send("msg16");
          new S95();
        }
        new S23();
      }
      send("msg9");
      switch (event) {
        case EV2066:
          new S43();
          try {
            send("msg1");
            new S95();
            new S74();
            log("note");
          } catch (IllegalStateException e) {
            new S19();
          } catch (IOException e) {
            new S43();
            new S1();
          }
          break;
        case EV2067:
          log("note");
          try {
            new S12();
            send("msg10");
            new S65();
            send("msg19");
          } catch (IllegalStateException e) {
            send("msg10");
            new S34();
            new S50();
            new S81();
          }
          if (x1 > 0) {
            new S17();
            new S65();
          } else {
            new S69();
            send("msg4");
          }
          break;
        case EV2068:
          new S23();
          if (x6 > 0) {
            log("note");
            new S1();
          } else {
            new S79();
          }
          if (x5 > 0) {
            new S17();
            new S73();
          } else {
            send("msg16");
          }
          new S40();
          break;
      }
    }
  }
  void close() {
    try {
      switch (event) {
        case EV2069:
          new S35();
          log("note");
          send("msg17");
          break;
      }
    } catch (IOException e) {
      switch (event) {
        case EV2070:
          send("msg16");
          try {
            new S57();
            log("note");
          } catch (IOException e) {
            send("msg3");
            log("note");
          } catch (IOException e) {
            log("note");
            send("msg11");
            new S96();
            new S28();
          }
          if (x6 > 0) {
            new S35();
          }
          break;
        case EV2071:
          send("msg6");
          new S82();
          if (x1 > 0) {
            new Helper();
            new S68();
            log("note");
          } else {
            new S15();
          }
          break;
      }
    } catch (IOException e) {
      new State();
      send("msg12");
      new S39();
      send("msg19");
    }
    send("msg15");
  }
  public void start() {
    new S22();
    log("note");
    new S32();
  }
  void stop() {
    new S21();
  }
  public void pause() {
    if (x7 > 0) {
      send("msg14");
    }
    try {
      send("msg2");
      new S48();
    } catch (IOException e) {
      log("note");
      new S95();
      send("msg11");
      if (x2 > 0) {
        new S81();
        new S71();
      } else {
        try {
          new S35();
          new S99();
        } catch (IllegalStateException e) {
          log("note");
        } finally {
          new S43();
          send("msg18");
        }
      }
    } catch (IOException e) {
      send("msg3");
      send("msg0");
      new S55();
    }
    new S55();
    if (x4 > 0) {
      try {
        log("note");
        new S70();
      } catch (IllegalStateException e) {
        new S14();
        log("note");
        new S23();
        new State();
      }
    }
  }
}
