class S55 extends Abstract10 {
  public void enter() {
    switch (event) {
      case EV1624:
        switch (event) {
          case EV1625:
            new S1();
            new S70();
            send("msg7");
            if (x2 > 0) {
              send("msg5");
              log("note");
            } else {
              send("msg14");
              new S5();
              send("msg8");
            }
            break;
          case EV1626:
            new S45();
            try {
              new S1();
              send("msg0");
            } catch (IllegalStateException e) {
              new S22();
              send("msg6");
              new S24();
              log("note");
            } finally {
              new S67();
              send("msg6");
              new S52();
              send("msg3");
            }
            break;
        }
        break;
    }
    send("msg16");
    try {
      send("msg5");
      send("msg7");
    } catch (TimeoutException e) {
      log("note");
      send("msg19");
      send("msg12");
      try {
        new State();
        new S87();
      } catch (IOException e) {
        send("msg1");
        log("note");
        switch (event) {
          case EV1627:
            new State();
            new S50();
            send("msg13");
            new S39();
            break;
          case EV1628:
            new S85();
            new S16();
            break;
        }
        new S97();
      }
    }
  }
  public void exit() {
    send("msg7");
    new S32();
  }
  public void handle() {
    try {
      new S2();
      send("msg8");
    } catch (TimeoutException e) {
      if (x8 > 0) {
        if (x3 > 0) {
          new S26();
        }
        log("note");
      }
      log("note");
      new S54();
      switch (event) {
        case EV1629:
          new S12();
          log("note");
          log("note");
          break;
      }
    }
    new S94();
    if (x4 > 0) {
      send("msg1");
      new S41();
      send("msg1");
    } else {
      log("note");
    }
    if (x8 > 0) {
      new S73();
      try {
        new S44();
        send("msg18");
      } catch (IOException e) {
        if (x3 > 0) {
          send("msg4");
          new S34();
        }
        new S37();
      } catch (TimeoutException e) {
        new Helper();
      }
    }
  }
  public void tick() {
    switch (event) {
      case EV1630:
        if (x7 > 0) {
          try {
            new S28();
            log("note");
            new S36();
          } catch (TimeoutException e) {
            log("note");
          }
          send("msg14");
        }
        new S57();
        break;
    }
  }
  void reset() {
    new S59();
    send("msg14");
    new S99();
  }
  void open() {
    try {
      send("msg4");
      new Helper();
    } catch (IllegalStateException e) {
      log("note");
    } finally {
      if (x7 > 0) {
        if (x8 > 0) {
          send("msg9");
          new S5();
          new Helper();
        }
        switch (event) {
          case EV1631:
            send("msg14");
            new S93();
            break;
          case EV1632:
            send("msg10");
            send("msg7");
            new S61();
            break;
          case EV1633:
            new S46();
            new S5();
            break;
        }
      } else {
        try {
          send("msg5");
        } finally {
          new S64();
          new S51();
          send("msg3");
          new S14();
        }
        if (x0 > 0) {
          new S19();
          new S67();
        } else {
          new Helper();
        }
        send("msg0");
        send("msg10");
      }
    }
    new S18();
    log("note");
  }
  void close() {
    new S41();
  }
  public void start() {
    send("msg2");
    new S56();
    new S53();
  }
  void stop() {
    if (x0 > 0) {
      new S24();
      send("msg4");
      try {
        new S69();
        if (x2 > 0) {
          new S61();
        }
        if (x2 > 0) {
          new S55();
          send("msg5");
          send("msg8");
        } else {
          new S45();
          new S4();
          new S95();
          new State();
        }
      } finally {
        switch (event) {
          case EV1634:
            new S41();
            send("msg2");
            break;
          case EV1635:
            send("msg9");
            send("msg0");
            break;
          case EV1636:
            send("msg1");
            new S60();
            send("msg0");
            break;
        }
        new S83();
        new S77();
      }
      try {
        send("msg13");
        new S28();
        new S27();
        switch (event) {
          case EV1637:
            send("msg6");
            break;
          case EV1638:
            new S22();
            new S11();
            log("note");
            break;
        }
      } catch (IOException e) {
        new S85();
        switch (event) {
          case EV1639:
            send("msg5");
            break;
          case EV1640:
            new S25();
            new S29();
            break;
        }
        send("msg9");
        switch (event) {
          case EV1641:
            new S7();
            send("msg4");
            break;
          case EV1642:
            new S9();
            new S75();
            send("msg8");
            break;
        }
      } finally {
        new S81();
        send("msg11");
        try {
          send("msg14");
          new S87();
          new S26();
        } catch (TimeoutException e) {
          send("msg13");
          log("note");
          new S51();
        }
        new Helper();
      }
    } else {
      send("msg1");
      send("msg16");
      try {
        new S20();
      } catch (TimeoutException e) {
        new S95();
        try {
          new S78();
          log("note");
          new S81();
        } catch (IOException e) {
          send("msg14");
          new S28();
          new S20();
          send("msg17");
        } catch (TimeoutException e) {
          send("msg8");
          log("note");
          new S5();
          new S57();
        }
      } catch (IllegalStateException e) {
        new S59();
      }
      send("msg8");
    }
    if (x6 > 0) {
      if (x1 > 0) {
        new S34();
        send("msg11");
        send("msg11");
      }
      switch (event) {
        case EV1643:
          send("msg16");
          new S96();
          break;
      }
      new S22();
    } else {
      send("msg15");
      if (x8 > 0) {
        try {
          log("note");
          send("msg4");
          send("msg16");
          new S14();
        } catch (IllegalStateException e) {
          new S86();
          send("msg18");
          send("msg15");
        }
        switch (event) {
          case EV1644:
            new S37();
            log("note");
            new S38();
            break;
        }
      }
      log("note");
    }
    send("msg16");
  }
  void pause() {
    send("msg12");
    new S54();
  }
}
