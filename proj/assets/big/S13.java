class S13 extends Abstract14 {
  void enter() {
    new S81();
  }
  void exit() {
    if (x1 > 0) {
      send("msg19");
    }
    new S17();
    log("note");
  }
  void handle() {
    if (x1 > 0) {
      new S42();
      try {
        if (x9 > 0) {
          new S10();
          new S64();
          new S68();
        } else {
          new S69();
          log("note");
          send("msg13");
          new S47();
        }
        send("msg10");
      } finally {
        switch (event) {
          case EV437:
            send("msg19");
            log("note");
            new S71();
            send("msg7");
            break;
          case EV438:
            send("msg19");
            new S18();
            new S34();
            log("note");
            break;
        }
        if (x2 > 0) {
          new State();
          new S47();
          new Helper();
        } else {
          send("msg8");
          send("msg13");
          send("msg15");
        }
        if (x0 > 0) {
          new S81();
          new S76();
          new Helper();
          new S82();
        }
      }
      log("note");
    } else {
      send("msg12");
      if (x3 > 0) {
        new S49();
      }
      if (x9 > 0) {
        new S44();
        send("msg4");
      }
    }
    switch (event) {
      case EV439:
        new S33();
        if (x6 > 0) {
          send("msg16");
          send("msg8");
          new Helper();
          send("msg12");
        }
        try {
          if (x3 > 0) {
            send("msg18");
            new S57();
          }
          if (x6 > 0) {
            new S6();
            new S23();
            new S54();
            new S51();
          } else {
            send("msg6");
            new S43();
            send("msg12");
          }
        } catch (IOException e) {
          new S14();
          try {
            new S40();
            send("msg19");
          } catch (IllegalStateException e) {
            new S51();
            new S42();
            send("msg9");
            send("msg14");
          } catch (IllegalStateException e) {
            new S69();
            new State();
          }
          new S71();
        } finally {
          if (x7 > 0) {
            new S89();
            new S69();
          } else {
            new S90();
            new S14();
          }
          send("msg0");
          if (x4 > 0) {
            new S24();
          }
          new Helper();
        }
        break;
      case EV440:
        if (x1 > 0) {
          send("msg12");
          new S57();
        } else {
          log("note");
          new S99();
          new S91();
        }
        new State();
        if (x5 > 0) {
          try {
            new S56();
            send("msg11");
            send("msg17");
            log("note");
          } catch (IllegalStateException e) {
            new S47();
            new S58();
          }
        } else {
          send("msg14");
          new S66();
          new S11();
        }
        log("note");
        break;
      case EV441:
        try {
          log("note");
          new S29();
          log("note");
        } catch (TimeoutException e) {
          log("note");
          send("msg5");
          new S52();
          send("msg11");
        }
        try {
          try {
            new S82();
            new Helper();
            log("note");
            send("msg5");
          } finally {
            new S3();
            new S73();
            new Helper();
          }
          new S76();
          new S88();
          try {
            send("msg18");
            send("msg14");
            send("msg8");
          } catch (IllegalStateException e) {
            new S88();
            new S100();
            new S40();
          } finally {
            log("note");
            send("msg3");
          }
        } catch (TimeoutException e) {
          new S63();
          send("msg9");
        } finally {
          new State();
          switch (event) {
            case EV442:
              new S56();
              new Helper();
              break;
            case EV443:
              new State();
              new S5();
              send("msg19");
              new S47();
              break;
            case EV444:
              send("msg7");
              send("msg14");
              send("msg17");
              break;
          }
          switch (event) {
            case EV445:
              new S75();
              break;
            case EV446:
              send("msg6");
              send("msg19");
              new State();
              new S90();
              break;
          }
          new Helper();
        }
        new S13();
        break;
    }
    if (x8 > 0) {
      try {
        send("msg18");
        switch (event) {
          case EV447:
            new S72();
            new S57();
            send("msg19");
            break;
          case EV448:
            new S62();
            break;
        }
      } catch (IllegalStateException e) {
        new S33();
        try {
          new S33();
          send("msg5");
        } catch (IllegalStateException e) {
          new S28();
        } finally {
          new S26();
        }
      }
      try {
        try {
          log("note");
          new S74();
          new State();
        } catch (IllegalStateException e) {
          new S21();
          new S16();
          send("msg11");
        }
      } finally {
        new S32();
        new S40();
        switch (event) {
          case EV449:
            new S98();
            send("msg13");
            break;
          case EV450:
            send("msg3");
            break;
        }
        new S90();
      }
      try {
        if (x1 > 0) {
          new State();
        } else {
          new S55();
        }
        try {
          new S92();
          new S71();
        } catch (IllegalStateException e) {
          new S42();
          send("msg6");
          new S94();
          send("msg16");
        }
        if (x1 > 0) {
          log("note");
          new S10();
          new S13();
        }
        new S82();
      } finally {
        send("msg17");
        send("msg19");
        log("note");
      }
    } else {
      switch (event) {
        case EV451:
          if (x5 > 0) {
            new S88();
            new S11();
            new S45();
          } else {
            new S13();
            new S11();
            new S64();
            new Helper();
          }
          send("msg10");
          send("msg18");
          if (x1 > 0) {
            new S15();
            new S5();
            new S27();
          } else {
            new S59();
          }
          break;
        case EV452:
          log("note");
          try {
            log("note");
            send("msg4");
          } catch (IllegalStateException e) {
            new Helper();
            new S12();
            new S1();
            send("msg6");
          } catch (IllegalStateException e) {
            send("msg6");
            send("msg2");
          }
          break;
      }
    }
  }
  void tick() {
    new S84();
  }
  void reset() {
    send("msg8");
    send("msg13");
    switch (event) {
      case EV453:
        new S57();
        send("msg7");
        break;
    }
    switch (event) {
      case EV454:
        switch (event) {
          case EV455:
            if (x3 > 0) {
              new S39();
              new S60();
              new S22();
            } else {
              send("msg3");
            }
            if (x5 > 0) {
              new S48();
              new S54();
            }
            if (x4 > 0) {
              new S38();
              new S8();
            } else {
              send("msg8");
            }
            break;
        }
        send("msg11");
        break;
      case EV456:
        log("note");
        new S78();
        try {
          new S87();
          send("msg17");
          try {
            new Helper();
            new S13();
            send("msg16");
          } finally {
            log("note");
          }
          if (x3 > 0) {
            send("msg7");
          } else {
            new S19();
            log("note");
            send("msg15");
          }
        } catch (TimeoutException e) {
          send("msg9");
          new State();
          switch (event) {
            case EV457:
              send("msg15");
              new S51();
              new S30();
              log("note");
              break;
            case EV458:
              new S24();
              new S37();
              new S3();
              break;
            case EV459:
              new S64();
              new State();
              new S99();
              break;
          }
          new S34();
        } catch (IllegalStateException e) {
          send("msg14");
        }
        break;
      case EV460:
        new S89();
        log("note");
        break;
    }
  }
  void open() {
    new S70();
  }
  void close() {
    try {
      if (x9 > 0) {
        new State();
        new S15();
      } else {
        new Helper();
        new State();
      }
      if (x2 > 0) {
        try {
          new S68();
        } catch (TimeoutException e) {
          new S90();
        }
        switch (event) {
          case EV461:
            send("msg0");
            new S94();
            new S31();
            new S36();
            break;
          case EV462:
            send("msg16");
            new S81();
            break;
          case EV463:
            new S82();
            break;
        }
        new S43();
        new S1();
      }
    } finally {
      new S10();
      switch (event) {
        case EV464:
          switch (event) {
            case EV465:
              new S7();
              log("note");
              break;
          }
          new S92();
          break;
        case EV466:
          try {
            send("msg11");
            new S28();
            new S3();
          } catch (IllegalStateException e) {
            send("msg14");
            log("note");
            log("note");
            log("note");
          } finally {
            log("note");
            new S48();
          }
          send("msg19");
          break;
      }
      send("msg2");
    }
    send("msg10");
    new S79();
  }
  public void start() {
    new S6();
    try {
      log("note");
    } catch (IOException e) {
      log("note");
    }
  }
  void stop() {
    new S43();
    new S26();
    new S61();
  }
  void pause() {
    send("msg9");
  }
}
