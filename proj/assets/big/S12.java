class S12 extends Abstract11 {
  void enter() {
    new S7();
    switch (event) {
      case EV405:
        new S51();
        break;
    }
  }
  void exit() {
    new S28();
    switch (event) {
      case EV406:
        new S53();
        break;
      case EV407:
        try {
          switch (event) {
            case EV408:
              new S81();
              send("msg11");
              break;
            case EV409:
              send("msg9");
              new S29();
              break;
          }
          new S54();
          if (x8 > 0) {
            new S74();
            send("msg9");
          }
        } catch (IOException e) {
          log("note");
        } catch (IOException e) {
          new S88();
          send("msg0");
        }
        send("msg17");
        break;
      case EV410:
        if (x3 > 0) {
          new S54();
        }
        new S13();
        break;
    }
    new State();
    if (x5 > 0) {
      send("msg19");
    }
  }
  public void handle() {
    new S14();
  }
  public void tick() {
    try {
      try {
        if (x0 > 0) {
          log("note");
        }
        send("msg4");
      } catch (IllegalStateException e) {
        try {
          send("msg14");
          new S22();
          send("msg16");
        } catch (TimeoutException e) {
          send("msg1");
          new S47();
          log("note");
        } catch (IllegalStateException e) {
          send("msg4");
          new S24();
          new S24();
        }
        new S51();
        try {
          new S66();
          send("msg5");
        } finally {
          new S33();
          send("msg17");
          new S25();
        }
      }
    } catch (IllegalStateException e) {
      switch (event) {
        case EV411:
          new S95();
          new S76();
          log("note");
          new S2();
          break;
      }
      send("msg7");
    } finally {
      switch (event) {
        case EV412:
          new S74();
          break;
        case EV413:
          new S32();
          new S52();
          new S56();
          send("msg14");
          break;
        case EV414:
          send("msg12");
          if (x0 > 0) {
            new S73();
            new S7();
            new Helper();
            new S83();
          } else {
            log("note");
            new S69();
            send("msg14");
            new S52();
          }
          break;
      }
    }
    switch (event) {
      case EV415:
        send("msg19");
        send("msg17");
        log("note");
        new State();
        break;
      case EV416:
        switch (event) {
          case EV417:
            new S100();
            send("msg4");
            break;
          case EV418:
            switch (event) {
              case EV419:
                new S45();
                break;
              case EV420:
                send("msg18");
                log("note");
                send("msg3");
                send("msg1");
                break;
            }
            break;
          case EV421:
            send("msg5");
            try {
              send("msg1");
            } catch (IOException e) {
              new S28();
              new S75();
              send("msg10");
            }
            break;
        }
        break;
      case EV422:
        if (x5 > 0) {
          new S2();
          send("msg19");
        } else {
          log("note");
        }
        new S91();
        new S81();
        break;
    }
  }
  void reset() {
    new S90();
    try {
      if (x3 > 0) {
        send("msg19");
        try {
          send("msg15");
          new S88();
          new S49();
          new S66();
        } finally {
          new S25();
          new S69();
          send("msg19");
        }
      }
      switch (event) {
        case EV423:
          new S91();
          new S100();
          new S15();
          new S21();
          break;
        case EV424:
          if (x0 > 0) {
            send("msg7");
            new S46();
            new S29();
          }
          if (x3 > 0) {
            log("note");
            new S39();
            new S28();
            send("msg0");
          } else {
            send("msg17");
            send("msg8");
            new S1();
          }
          send("msg5");
          new S28();
          break;
      }
      new S35();
    } catch (TimeoutException e) {
      new S90();
      switch (event) {
        case EV425:
          if (x3 > 0) {
            send("msg19");
          }
          new S17();
          if (x0 > 0) {
            send("msg15");
            send("msg13");
            send("msg15");
            new S37();
          }
          new S7();
          break;
        case EV426:
          switch (event) {
            case EV427:
              send("msg18");
              new S50();
              break;
          }
          new S87();
          break;
      }
      log("note");
      if (x7 > 0) {
        switch (event) {
          case EV428:
            log("note");
            new S46();
            new S25();
            send("msg14");
            break;
        }
        switch (event) {
          case EV429:
            log("note");
            new S15();
            new S88();
            log("note");
            break;
          case EV430:
            new S28();
            send("msg9");
            break;
          case EV431:
            send("msg16");
            send("msg14");
            break;
        }
        if (x7 > 0) {
          new S74();
          new S14();
        } else {
          new S92();
          send("msg4");
        }
      } else {
        send("msg10");
        new S95();
        if (x7 > 0) {
          new S3();
        }
      }
    }
    try {
      send("msg12");
    } finally {
      send("msg15");
    }
  }
  void open() {
    send("msg4");
    send("msg16");
    send("msg18");
    send("msg18");
  }
  void close() {
    new S17();
  }
  void start() {
    send("msg17");
    new S82();
    new S32();
  }
  public void stop() {
    send("msg8");
    switch (event) {
      case EV432:
        new Helper();
        if (x1 > 0) {
          send("msg17");
        } else {
          try {
            log("note");
            new S31();
            new S65();
          } finally {
            send("msg16");
            new S23();
            send("msg17");
            new S31();
          }
          send("msg2");
          if (x8 > 0) {
            send("msg14");
          } else {
            send("msg13");
            new Helper();
            send("msg7");
            send("msg2");
          }
          send("msg1");
        }
        break;
      case EV433:
        new S54();
        if (x5 > 0) {
          if (x7 > 0) {
            new S48();
            send("msg18");
          }
          send("msg9");
          new S20();
        }
        break;
    }
    send("msg14");
    send("msg13");
  }
  void pause() {
    switch (event) {
      case EV434:
        send("msg6");
        new S24();
        new S90();
        switch (event) {
          case EV435:
            log("note");
            send("msg7");
            new S45();
            break;
          case EV436:
            send("msg18");
            if (x6 > 0) {
              log("note");
              send("msg12");
              send("msg6");
            } else {
              log("note");
              new S64();
              send("msg13");
              send("msg5");
            }
            log("note");
            break;
        }
        break;
    }
  }
}
