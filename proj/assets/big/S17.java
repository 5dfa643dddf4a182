class S17 extends Abstract8 {
  void enter() {
    new S69();
    new S4();
    send("msg15");
    new State();
  }
  public void exit() {
    new S80();
    send("msg17");
  }
  public void handle() {
    send("msg3");
    switch (event) {
      case EV537:
        log("note");
        new S9();
        new S40();
        try {
          try {
            new S9();
          } catch (TimeoutException e) {
            send("msg3");
            send("msg14");
            new State();
          } finally {
            new S5();
            send("msg14");
            send("msg1");
            new S13();
          }
        } catch (IllegalStateException e) {
          new S79();
          send("msg3");
        } catch (TimeoutException e) {
          new S17();
          log("note");
        }
        break;
      case EV538:
        try {
          send("msg16");
          send("msg5");
          send("msg12");
          new S49();
        } catch (IOException e) {
          new S16();
          send("msg17");
          send("msg1");
        } catch (TimeoutException e) {
          if (x1 > 0) {
            send("msg18");
            new S21();
            send("msg2");
            new S50();
          }
          send("msg0");
          new S6();
          new S5();
        }
        log("note");
        new S91();
        break;
    }
    send("msg5");
  }
  void tick() {
    new State();
    new Helper();
    switch (event) {
      case EV539:
        new S19();
        break;
    }
  }
  public void reset() {
    new State();
    send("msg2");
    new S30();
  }
  void open() {
    switch (event) {
      case EV540:
        new S37();
        send("msg2");
        switch (event) {
          case EV541:
            if (x8 > 0) {
              new S57();
              new S75();
              log("note");
              send("msg6");
            }
            send("msg19");
            break;
          case EV542:
            log("note");
            if (x7 > 0) {
              new S100();
              log("note");
              send("msg5");
            } else {
              new S90();
              send("msg1");
              send("msg16");
              new State();
            }
            try {
              log("note");
              send("msg13");
              new Helper();
              send("msg5");
            } catch (TimeoutException e) {
              send("msg13");
              send("msg11");
            }
            break;
          case EV543:
            try {
              send("msg16");
              send("msg3");
            } finally {
              new S68();
            }
            switch (event) {
              case EV544:
                new S43();
                break;
              case EV545:
                log("note");
                new S91();
                send("msg4");
                break;
              case EV546:
                new State();
                send("msg18");
                break;
            }
            try {
              send("msg5");
            } catch (IOException e) {
              send("msg4");
            } catch (IOException e) {
              send("msg8");
              send("msg15");
            }
            switch (event) {
              case EV547:
                send("msg19");
                new S81();
                send("msg3");
                break;
              case EV548:
                new S10();
                send("msg13");
                break;
            }
            break;
        }
        break;
    }
    log("note");
    new S97();
    log("note");
  }
  void close() {
    try {
      try {
        send("msg5");
        new S9();
        send("msg16");
      } finally {
        switch (event) {
          case EV549:
            log("note");
            send("msg13");
            send("msg5");
            log("note");
            break;
          case EV550:
            log("note");
            break;
          case EV551:
            new S9();
            new S49();
            break;
        }
        new State();
      }
      send("msg18");
      if (x5 > 0) {
        switch (event) {
          case EV552:
            send("msg0");
            break;
        }
        switch (event) {
          case EV553:
            send("msg8");
            new Helper();
            send("msg18");
            new S30();
            break;
          case EV554:
            log("note");
            new S60();
            send("msg10");
            new S30();
            break;
          case EV555:
            new S84();
            new S98();
            send("msg7");
            break;
        }
      } else {
        new S45();
        try {
          send("msg1");
          new S41();
        } catch (TimeoutException e) {
          log("note");
          new S49();
          new S27();
        }
      }
      if (x9 > 0) {
        new Helper();
        send("msg16");
        new S39();
      }
    } catch (IllegalStateException e) {
      send("msg3");
      new S1();
    } finally {
      send("msg17");
      log("note");
      switch (event) {
        case EV556:
          switch (event) {
            case EV557:
              new S67();
              break;
          }
          break;
        case EV558:
          new S64();
          log("note");
          try {
            new S31();
            send("msg2");
            log("note");
          } catch (IOException e) {
            new S76();
            log("note");
          } catch (IllegalStateException e) {
            log("note");
          }
          new S76();
          break;
      }
    }
  }
  void start() {
    new State();
    new S71();
    new S9();
  }
  public void stop() {
    new S35();
  }
  void pause() {
    send("msg18");
    switch (event) {
      case EV559:
        switch (event) {
          case EV560:
            switch (event) {
              case EV561:
                new S73();
                new S27();
                break;
              case EV562:
                new Helper();
                break;
              case EV563:
                new S28();
                break;
            }
            break;
        }
        send("msg5");
        new S19();
        break;
      case EV564:
        log("note");
        break;
    }
    send("msg19");
  }
}
