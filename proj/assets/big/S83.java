class S83 extends Abstract14 {
  void enter() {
    new S65();
    new S60();
    log("note");
  }
  void exit() {
    if (x0 > 0) {
      try {
        switch (event) {
          case EV2518:
            new S28();
            send("msg18");
            new S36();
            new S60();
            break;
        }
        new S33();
      } catch (IllegalStateException e) {
        try {
          send("msg11");
          new Helper();
        } catch (IOException e) {
          send("msg2");
          send("msg8");
          new S48();
        } finally {
          log("note");
          send("msg13");
          new S37();
        }
        new S24();
        try {
          send("msg7");
        } catch (TimeoutException e) {
          send("msg0");
          log("note");
        } catch (IllegalStateException e) {
          new S66();
          new S71();
        }
        new S19();
      }
      send("msg8");
    }
  }
  public void handle() {
    new S97();
  }
  public void tick() {
    new S79();
    send("msg18");
  }
  void reset() {
    new S97();
    new S13();
  }
  void open() {
    send("msg11");
    new S25();
    send("msg12");
    switch (event) {
      case EV2519:
        if (x4 > 0) {
          send("msg5");
          send("msg9");
          if (x1 > 0) {
            new S26();
            send("msg4");
            new S94();
          } else {
            new S96();
            new S23();
            new S42();
          }
        }
        send("msg8");
        new S29();
        break;
      case EV2520:
        send("msg1");
        new S94();
        if (x0 > 0) {
          new S26();
          if (x0 > 0) {
            send("msg4");
            log("note");
          } else {
            send("msg2");
            new S35();
          }
          if (x8 > 0) {
            new State();
            send("msg11");
            send("msg14");
            new S11();
          }
          send("msg2");
        }
        break;
      case EV2521:
        send("msg18");
        if (x0 > 0) {
          new S52();
        } else {
          new S52();
        }
        send("msg1");
        send("msg8");
        break;
    }
  }
  public void close() {
    switch (event) {
      case EV2522:
        new S88();
        send("msg7");
        break;
      case EV2523:
        log("note");
        break;
      case EV2524:
        send("msg8");
        new S58();
        new S47();
        break;
    }
    log("note");
    try {
      try {
        new S97();
        try {
          new State();
          new S57();
        } catch (IOException e) {
          new S83();
        }
      } catch (IOException e) {
        new S4();
        new S51();
        log("note");
      } catch (IOException e) {
        new S79();
      }
    } catch (IllegalStateException e) {
      new S85();
      switch (event) {
        case EV2525:
          new S8();
          switch (event) {
            case EV2526:
              new S22();
              send("msg0");
              new S76();
              new State();
              break;
            case EV2527:
              new S68();
              send("msg4");
              log("note");
              new S1();
              break;
          }
          if (x7 > 0) {
            new S62();
            log("note");
          } else {
            send("msg11");
            send("msg5");
            new S26();
            new S1();
          }
          if (x8 > 0) {
            send("msg14");
            log("note");
            new S90();
            send("msg10");
          }
          break;
        case EV2528:
          new S94();
          break;
      }
      new S70();
      log("note");
    } finally {
      send("msg0");
      send("msg15");
      new S82();
    }
    if (x2 > 0) {
      send("msg8");
      new S52();
    } else {
      new S78();
      try {
        new S29();
        switch (event) {
          case EV2529:
            send("msg3");
            new S56();
            send("msg19");
            break;
        }
      } catch (TimeoutException e) {
        new S92();
      }
    }
  }
  public void start() {
    if (x8 > 0) {
      new S27();
      try {
        send("msg2");
      } catch (TimeoutException e) {
        send("msg7");
        new S40();
        new S58();
      } catch (IllegalStateException e) {
        send("msg14");
        new S34();
      }
      new S48();
      if (x7 > 0) {
        switch (event) {
          case EV2530:
            new S95();
            new S90();
            break;
        }
        send("msg4");
        if (x4 > 0) {
          send("msg12");
          send("msg7");
          new S10();
        }
        send("msg7");
      } else {
        send("msg6");
      }
    } else {
      switch (event) {
        case EV2531:
          new S40();
          break;
        case EV2532:
          send("msg19");
          if (x6 > 0) {
            send("msg12");
            new S80();
          } else {
            new S20();
          }
          send("msg8");
          try {
            log("note");
            new S89();
            new S39();
            new S88();
          } catch (IllegalStateException e) {
            send("msg8");
            new S56();
          } finally {
            log("note");
          }
          break;
        case EV2533:
          send("msg1");
          new S40();
          switch (event) {
            case EV2534:
              send("msg7");
              log("note");
              break;
            case EV2535:
              send("msg1");
              new S22();
              send("msg6");
              new S2();
              break;
            case EV2536:
              send("msg0");
              send("msg7");
              send("msg1");
              new S82();
              break;
          }
          break;
      }
      send("msg12");
      new S74();
      if (x0 > 0) {
        new S42();
      }
    }
    send("msg4");
    send("msg3");
  }
  void stop() {
    new S84();
    new S71();
    new S69();
  }
  void pause() {
    new S79();
    new S96();
    try {
      try {
        try {
          new S89();
          new S88();
          log("note");
        } catch (IOException e) {
          new S2();
          log("note");
        } finally {
          new S96();
          send("msg14");
        }
        send("msg7");
        new S100();
      } catch (IllegalStateException e) {
        try {
          send("msg4");
        } catch (IOException e) {
          new S72();
        }
        send("msg6");
      } finally {
        send("msg14");
        try {
          new S84();
          new S48();
          new State();
        } catch (IllegalStateException e) {
          new S46();
          send("msg6");
        }
        new S75();
      }
    } catch (IllegalStateException e) {
      switch (event) {
        case EV2537:
          switch (event) {
            case EV2538:
              new S30();
              log("note");
              new S22();
              break;
            case EV2539:
              send("msg4");
              new S94();
              send("msg11");
              send("msg8");
              break;
            case EV2540:
              send("msg9");
              send("msg11");
              new S21();
              new S89();
              break;
          }
          send("msg0");
          log("note");
          break;
        case EV2541:
          new S66();
          new State();
          new S37();
          break;
      }
      try {
        try {
          send("msg13");
          new S59();
          new S29();
        } catch (IllegalStateException e) {
          send("msg3");
          log("note");
          new Helper();
          send("msg11");
        } finally {
          send("msg11");
          new S19();
          new S39();
        }
        log("note");
        new S85();
      } catch (IOException e) {
        send("msg15");
        if (x7 > 0) {
          new S73();
          new S56();
        } else {
          log("note");
          send("msg19");
          new S79();
          new S95();
        }
        new State();
      } catch (TimeoutException e) {
        switch (event) {
          case EV2542:
            new S25();
            send("msg1");
            break;
          case EV2543:
            new S94();
            log("note");
            send("msg17");
            break;
        }
        new S65();
      }
      send("msg4");
    }
  }
}
