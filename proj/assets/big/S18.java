class S18 extends Abstract17 {
  void enter() {
    new S34();
    send("msg8");
  }
  void exit() {
    try {
      new S43();
      if (x9 > 0) {
        new S83();
      } else {
        log("note");
        new State();
        new S71();
      }
    } catch (TimeoutException e) {
      new Helper();
      try {
        send("msg1");
        log("note");
        switch (event) {
          case EV565:
            new S97();
            send("msg5");
            send("msg13");
            break;
        }
        send("msg17");
      } catch (TimeoutException e) {
        new S78();
        if (x2 > 0) {
          new S70();
          new S28();
        } else {
          new S60();
          log("note");
          new S85();
        }
        new S62();
      } finally {
        switch (event) {
          case EV566:
            new S15();
            new S96();
            send("msg12");
            break;
        }
      }
      send("msg19");
    } finally {
      new S20();
      log("note");
    }
  }
  void handle() {
    new S73();
  }
  void tick() {
    if (x2 > 0) {
      send("msg11");
      new S79();
    }
    log("note");
    new S99();
  }
  void reset() {
    send("msg7");
    switch (event) {
      case EV567:
        new S98();
        send("msg5");
        break;
      case EV568:
        new S64();
        new S77();
        new S6();
        break;
    }
    new S76();
    new S86();
  }
  void open() {
    if (x7 > 0) {
      send("msg15");
      send("msg16");
      send("msg15");
      new S59();
    } else {
      new S29();
      if (x9 > 0) {
        try {
          new S67();
          send("msg0");
          new S50();
        } catch (IOException e) {
          new S71();
          new S100();
          new S97();
        }
        new S56();
      } else {
        log("note");
      }
      switch (event) {
        case EV569:
          new S6();
          new S49();
          switch (event) {
            case EV570:
              send("msg7");
              new S37();
              new Helper();
              new S8();
              break;
            case EV571:
              send("msg19");
              send("msg6");
              new S82();
              break;
          }
          break;
      }
    }
    new S14();
  }
  void close() {
    try {
      if (x0 > 0) {
        new S29();
        new State();
        new S29();
      }
      switch (event) {
        case EV572:
          log("note");
          log("note");
          if (x0 > 0) {
            send("msg6");
            log("note");
            send("msg13");
            send("msg12");
          } else {
            new S90();
          }
          log("note");
          break;
        case EV573:
          send("msg5");
          switch (event) {
            case EV574:
              new S61();
              send("msg17");
              new S58();
              log("note");
              break;
          }
          break;
      }
    } catch (TimeoutException e) {
      send("msg19");
    } catch (IOException e) {
      try {
        send("msg18");
        if (x2 > 0) {
          new S6();
        }
        if (x4 > 0) {
          log("note");
          new S56();
          send("msg16");
        }
        new S25();
      } catch (TimeoutException e) {
        try {
          send("msg0");
          new S27();
          new S60();
        } catch (IllegalStateException e) {
          send("msg7");
          new S2();
          new S64();
        }
        log("note");
        try {
          new S87();
          new S28();
          new Helper();
        } finally {
          new S8();
          new S33();
          send("msg12");
        }
      }
      if (x4 > 0) {
        new S87();
        switch (event) {
          case EV575:
            send("msg5");
            log("note");
            send("msg13");
            break;
          case EV576:
            new S69();
            new S75();
            new S21();
            send("msg5");
            break;
        }
      }
      if (x1 > 0) {
        send("msg17");
        new S54();
        if (x5 > 0) {
          new S1();
          send("msg15");
        }
      }
    }
    send("msg2");
  }
  void start() {
    log("note");
  }
  void stop() {
    if (x9 > 0) {
      new S30();
      new S98();
    } else {
      if (x5 > 0) {
        try {
          send("msg6");
          new S52();
        } catch (IOException e) {
          send("msg12");
          send("msg10");
        }
        try {
          send("msg6");
          send("msg14");
          new S71();
          new S67();
        } catch (IllegalStateException e) {
          new S3();
          log("note");
        } catch (IllegalStateException e) {
          send("msg11");
          new S56();
          new S97();
        }
        new S5();
        send("msg11");
      }
      new S98();
    }
    send("msg15");
    new S26();
  }
  void pause() {
    log("note");
    new S83();
  }
}
