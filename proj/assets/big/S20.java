class S20 extends Abstract18 {
  void enter() {
    try {
      if (x1 > 0) {
        try {
          send("msg13");
        } finally {
          new S5();
        }
      }
      send("msg10");
    } catch (IOException e) {
      log("note");
      send("msg15");
      new S83();
    } catch (TimeoutException e) {
      log("note");
      switch (event) {
        case EV586:
          send("msg6");
          break;
        case EV587:
          new S51();
          switch (event) {
            case EV588:
              new S71();
              new S77();
              break;
            case EV589:
              send("msg0");
              send("msg8");
              break;
          }
          new S64();
          break;
      }
    }
    send("msg3");
  }
  public void exit() {
    send("msg9");
  }
  void handle() {
    try {
      send("msg9");
      new S68();
    } catch (IllegalStateException e) {
      send("msg10");
      switch (event) {
        case EV590:
          send("msg16");
          try {
            new S55();
            new S89();
            new S74();
          } catch (TimeoutException e) {
            new S88();
          } finally {
            send("msg6");
          }
          break;
        case EV591:
          new S8();
          break;
      }
      if (x7 > 0) {
        new S63();
        new S45();
        send("msg11");
      } else {
        send("msg7");
      }
      try {
        if (x8 > 0) {
          log("note");
          send("msg14");
          send("msg18");
        }
      } catch (IOException e) {
        send("msg13");
        send("msg12");
        new S16();
        log("note");
      } catch (IllegalStateException e) {
        switch (event) {
          case EV592:
            new S91();
            new S87();
            break;
        }
        new S86();
      }
    } finally {
      send("msg7");
      new S36();
      log("note");
      send("msg1");
    }
    try {
      new S96();
      new S16();
    } finally {
      log("note");
      new S44();
      send("msg12");
      send("msg16");
    }
  }
  void tick() {
    send("msg16");
    switch (event) {
      case EV593:
        new S29();
        break;
    }
  }
  void reset() {
    new S51();
    new S48();
    if (x9 > 0) {
      new S78();
      new S56();
      switch (event) {
        case EV594:
          send("msg0");
          new S91();
          try {
            new S40();
            new S65();
            send("msg19");
            send("msg11");
          } catch (IOException e) {
            new S92();
            send("msg5");
          }
          try {
            send("msg5");
            new S46();
            send("msg13");
          } finally {
            send("msg12");
            new S70();
            new S95();
            send("msg19");
          }
          break;
      }
      log("note");
    } else {
      if (x5 > 0) {
        switch (event) {
          case EV595:
            send("msg5");
            send("msg9");
            new S74();
            break;
        }
        new S18();
        log("note");
        send("msg16");
      } else {
        new S60();
      }
      new Helper();
      try {
        new S42();
      } catch (IOException e) {
        send("msg2");
        send("msg18");
      } finally {
        new S32();
        send("msg19");
      }
      send("msg3");
    }
    switch (event) {
      case EV596:
        try {
          if (x1 > 0) {
            new S13();
            new S50();
            log("note");
            new S25();
          }
        } catch (IOException e) {
          new S70();
          if (x4 > 0) {
            new S87();
            new S15();
            send("msg12");
          } else {
            new S53();
            log("note");
            new S97();
            send("msg3");
          }
          try {
            log("note");
            log("note");
            send("msg8");
          } catch (TimeoutException e) {
            new S100();
            new S87();
            new Helper();
            new S84();
          } catch (IOException e) {
            new S41();
          }
        } finally {
          try {
            new S69();
            send("msg6");
            log("note");
            new S69();
          } catch (IllegalStateException e) {
            send("msg15");
            send("msg13");
            send("msg7");
          } finally {
            send("msg1");
            new S60();
            new S43();
          }
          send("msg15");
          try {
            new S42();
            new State();
            send("msg7");
          } finally {
            new S64();
            new S48();
          }
        }
        break;
    }
  }
  void open() {
    new S49();
    new S66();
  }
  public void close() {
    new S25();
  }
  void start() {
    new S72();
  }
  void stop() {
    new S9();
    new S98();
    send("msg1");
    if (x9 > 0) {
      send("msg3");
      try {
        switch (event) {
          case EV597:
            send("msg15");
            new State();
            new State();
            break;
          case EV598:
            send("msg9");
            new S95();
            new S59();
            new S39();
            break;
          case EV599:
            send("msg4");
            break;
        }
        switch (event) {
          case EV600:
            new S47();
            new S7();
            new State();
            break;
        }
        new S80();
      } catch (IllegalStateException e) {
        send("msg11");
        switch (event) {
          case EV601:
            log("note");
            new S2();
            break;
          case EV602:
            send("msg17");
            new S54();
            send("msg9");
            break;
        }
        log("note");
      } catch (IllegalStateException e) {
        new S99();
        new Helper();
        new Helper();
      }
      new S100();
    }
  }
  public void pause() {
    new S78();
  }
}
