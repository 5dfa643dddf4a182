class S54 extends State {
  void enter() {
    send("msg7");
    new S80();
  }
  void exit() {
    new S55();
    if (x2 > 0) {
      new S44();
    }
    new S52();
    send("msg5");
  }
  void handle() {
    new S79();
  }
  void tick() {
    new S86();
    switch (event) {
      case EV1601:
        send("msg1");
        break;
      case EV1602:
        try {
          new S33();
          new S48();
          if (x4 > 0) {
            new S94();
          }
          if (x1 > 0) {
            new S49();
            new S33();
            new S86();
          }
        } finally {
          new State();
          if (x6 > 0) {
            send("msg3");
            send("msg16");
          } else {
            new S6();
            new State();
            new S28();
            new S78();
          }
          send("msg16");
          new S58();
        }
        log("note");
        log("note");
        break;
      case EV1603:
        log("note");
        if (x2 > 0) {
          switch (event) {
            case EV1604:
              new S35();
              new S32();
              send("msg12");
              break;
          }
        }
        new S27();
        send("msg19");
        break;
    }
  }
  void reset() {
    send("msg14");
    send("msg15");
    log("note");
  }
  void open() {
    if (x0 > 0) {
      switch (event) {
        case EV1605:
          try {
            new S5();
          } catch (IllegalStateException e) {
            send("msg9");
            log("note");
            send("msg2");
            new S68();
          }
          new S46();
          log("note");
          break;
      }
      new S38();
    } else {
      send("msg17");
      new S2();
      new S7();
      send("msg15");
    }
    try {
      try {
        try {
          new State();
          new S77();
          log("note");
        } finally {
          log("note");
          send("msg17");
          new S47();
          send("msg16");
        }
        switch (event) {
          case EV1606:
            send("msg17");
            send("msg10");
            send("msg8");
            send("msg7");
            break;
        }
      } finally {
        new S79();
        try {
          send("msg9");
          new S45();
          new S25();
        } catch (TimeoutException e) {
          new S72();
          new S59();
          send("msg11");
          send("msg5");
        } finally {
          new S77();
          new S79();
          send("msg5");
          new S19();
        }
      }
      try {
        new S67();
        new S34();
      } finally {
        new S14();
        switch (event) {
          case EV1607:
            send("msg11");
            break;
          case EV1608:
            send("msg19");
            new S54();
            new S70();
            log("note");
            break;
          case EV1609:
            new S95();
            send("msg9");
            new Helper();
            send("msg11");
            break;
        }
        send("msg3");
      }
    } catch (IOException e) {
      log("note");
      if (x5 > 0) {
        switch (event) {
          case EV1610:
            send("msg19");
            send("msg13");
            new S25();
            new S83();
            break;
          case EV1611:
            send("msg18");
            send("msg17");
            send("msg13");
            break;
          case EV1612:
            send("msg19");
            new S93();
            send("msg14");
            break;
        }
        try {
          new S63();
          new S83();
          new S58();
          send("msg2");
        } finally {
          new S98();
        }
      }
      new S11();
      new S51();
    } catch (IOException e) {
      switch (event) {
        case EV1613:
          send("msg16");
          new Helper();
          log("note");
          break;
        case EV1614:
          try {
            send("msg10");
            send("msg10");
            send("msg18");
            new S71();
          } catch (IllegalStateException e) {
            send("msg10");
            new S2();
            new Helper();
          }
          new S53();
          break;
      }
      switch (event) {
        case EV1615:
          switch (event) {
            case EV1616:
              send("msg5");
              log("note");
              send("msg14");
              break;
          }
          send("msg7");
          break;
      }
    }
  }
  void close() {
    switch (event) {
      case EV1617:
        new S61();
        send("msg11");
        log("note");
        break;
    }
    send("msg10");
    new S86();
  }
  void start() {
    send("msg15");
    log("note");
  }
  void stop() {
    switch (event) {
      case EV1618:
        switch (event) {
          case EV1619:
            try {
              new S93();
              send("msg2");
            } finally {
              new S20();
              send("msg12");
            }
            break;
          case EV1620:
            try {
              log("note");
              log("note");
            } finally {
              log("note");
              send("msg8");
              send("msg10");
            }
            send("msg11");
            new S61();
            break;
        }
        send("msg12");
        new S31();
        break;
      case EV1621:
        send("msg14");
        new S98();
        break;
      case EV1622:
        new State();
        break;
    }
    try {
      new S56();
      log("note");
      new S80();
      send("msg15");
    } catch (IllegalStateException e) {
      new S96();
      if (x4 > 0) {
        log("note");
      } else {
        try {
          send("msg13");
          new S11();
        } finally {
          new Helper();
          send("msg8");
        }
      }
    } catch (TimeoutException e) {
      switch (event) {
        case EV1623:
          new State();
          send("msg15");
          send("msg7");
          break;
      }
      send("msg13");
    }
    new S56();
    new S26();
  }
  void pause() {
    new S1();
    new S33();
  }
}
