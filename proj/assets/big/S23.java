class S23 extends Abstract19 {
  public void enter() {
    switch (event) {
      case EV687:
        if (x2 > 0) {
          send("msg13");
          send("msg3");
          new S35();
          if (x1 > 0) {
            send("msg2");
            new S44();
            send("msg7");
          }
        }
        break;
    }
  }
  public void exit() {
    switch (event) {
      case EV688:
        send("msg8");
        break;
      case EV689:
        new S25();
        break;
      case EV690:
        log("note");
        send("msg14");
        if (x6 > 0) {
          new S45();
          switch (event) {
            case EV691:
              send("msg17");
              break;
            case EV692:
              new S16();
              send("msg5");
              break;
          }
          try {
            new S57();
          } catch (IOException e) {
            send("msg5");
            new S27();
            new State();
          }
          if (x6 > 0) {
            new S3();
            send("msg15");
            new S57();
          }
        }
        try {
          new S51();
          new S92();
          new S33();
        } catch (IOException e) {
          send("msg12");
          send("msg7");
          switch (event) {
            case EV693:
              send("msg11");
              new S58();
              new S47();
              send("msg16");
              break;
            case EV694:
              send("msg9");
              send("msg3");
              send("msg10");
              new State();
              break;
            case EV695:
              log("note");
              break;
          }
        }
        break;
    }
  }
  void handle() {
    send("msg13");
  }
  void tick() {
    new S94();
  }
  void reset() {
    send("msg14");
    log("note");
  }
  void open() {
    log("note");
  }
  void close() {
    switch (event) {
      case EV696:
        new State();
        break;
    }
  }
  void start() {
    switch (event) {
      case EV697:
        send("msg11");
        if (x0 > 0) {
          switch (event) {
            case EV698:
              send("msg2");
              send("msg17");
              break;
            case EV699:
              new S77();
              new S68();
              break;
            case EV700:
              new S1();
              log("note");
              log("note");
              break;
          }
          log("note");
        } else {
          log("note");
          log("note");
        }
        send("msg2");
        new S56();
        break;
    }
    new State();
    log("note");
  }
  void stop() {
    new S57();
    log("note");
  }
  void pause() {
    if (x0 > 0) {
      switch (event) {
        case EV701:
          send("msg4");
          break;
        case EV702:
          new S67();
          new S35();
          try {
            new S24();
            send("msg14");
            send("msg12");
            send("msg12");
          } catch (IOException e) {
            new S68();
          } catch (IllegalStateException e) {
            send("msg19");
            send("msg9");
            new S3();
            new S78();
          }
          break;
        case EV703:
          switch (event) {
            case EV704:
              new S77();
              send("msg2");
              break;
            case EV705:
              new S72();
              new S77();
              new S78();
              break;
          }
          switch (event) {
            case EV706:
              send("msg3");
              log("note");
              break;
            case EV707:
              send("msg14");
              break;
            case EV708:
              log("note");
              send("msg7");
              new S92();
              break;
          }
          if (x5 > 0) {
            send("msg2");
            send("msg1");
            log("note");
            new S5();
          } else {
            send("msg0");
            log("note");
            new S44();
            new S54();
          }
          new S1();
          break;
      }
      try {
        new S16();
      } catch (TimeoutException e) {
        switch (event) {
          case EV709:
            send("msg7");
            log("note");
            break;
          case EV710:
            new S26();
            break;
        }
        new S2();
        switch (event) {
          case EV711:
            new S39();
            new S50();
            break;
          case EV712:
            log("note");
            send("msg12");
            break;
        }
        send("msg5");
      } finally {
        try {
          new S40();
        } finally {
          send("msg7");
          log("note");
          new S13();
        }
        new State();
        try {
          send("msg5");
        } catch (IOException e) {
          send("msg6");
          new State();
        } finally {
          new S21();
          new S16();
        }
      }
      switch (event) {
        case EV713:
          new S84();
          new S19();
          break;
      }
      if (x8 > 0) {
        new S22();
        new S17();
        if (x7 > 0) {
          new S22();
          log("note");
        } else {
          send("msg3");
        }
      } else {
        send("msg19");
      }
    }
    if (x1 > 0) {
      send("msg10");
      send("msg11");
      new S64();
    } else {
      new Helper();
      send("msg6");
      new S62();
      if (x5 > 0) {
        new S70();
        new S63();
        send("msg11");
      }
    }
    send("msg3");
  }
}
