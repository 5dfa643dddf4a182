class S81 extends Abstract13 {
  void enter() {
    try {
      switch (event) {
        case EV2481:
          new S27();
          break;
      }
      switch (event) {
        case EV2482:
          new S100();
          log("note");
          try {
            send("msg15");
          } finally {
            send("msg5");
            send("msg4");
            new S27();
          }
          break;
      }
      switch (event) {
        case EV2483:
          new S78();
          break;
      }
    } catch (TimeoutException e) {
      send("msg9");
      new S87();
      send("msg10");
      new S56();
    }
    if (x2 > 0) {
      new S72();
    }
  }
  void exit() {
    if (x1 > 0) {
      send("msg18");
      new S45();
      send("msg8");
    } else {
      new S2();
      send("msg3");
      switch (event) {
        case EV2484:
          send("msg6");
          try {
            send("msg1");
            send("msg0");
            new S19();
            new S44();
          } catch (TimeoutException e) {
            new S64();
            new S3();
            send("msg0");
            new S62();
          }
          try {
            new S79();
          } catch (IOException e) {
            send("msg9");
            new State();
            new S37();
            send("msg4");
          } finally {
            new S29();
            new S26();
          }
          break;
        case EV2485:
          log("note");
          send("msg8");
          try {
            new State();
            send("msg1");
            new S100();
            new S30();
          } catch (IllegalStateException e) {
            new S43();
          } finally {
            new Helper();
          }
          try {
            new S8();
            new Helper();
          } catch (IllegalStateException e) {
            new S100();
          }
          break;
        case EV2486:
          new S77();
          if (x2 > 0) {
            new S8();
            new S99();
            log("note");
            send("msg10");
          } else {
            new S42();
            send("msg7");
            send("msg15");
          }
          break;
      }
    }
  }
  void handle() {
    switch (event) {
      case EV2487:
        send("msg3");
        send("msg15");
        break;
      case EV2488:
        new S88();
        new S57();
        if (x6 > 0) {
          new State();
        } else {
          switch (event) {
            case EV2489:
              new S25();
              new S21();
              new S87();
              break;
            case EV2490:
              send("msg12");
              break;
            case EV2491:
              new Helper();
              log("note");
              new S62();
              new S49();
              break;
          }
          if (x9 > 0) {
            new S34();
            send("msg17");
            new Helper();
            new S63();
          } else {
            new S94();
            log("note");
            send("msg2");
          }
          try {
            send("msg6");
            new S26();
          } catch (IOException e) {
            new S60();
            send("msg3");
            send("msg16");
          } catch (IOException e) {
            new S48();
            new S97();
            new S12();
          }
          send("msg7");
        }
        break;
      case EV2492:
        new State();
        send("msg0");
        try {
          new Helper();
          new S37();
          try {
            send("msg4");
            new S86();
          } catch (IOException e) {
            log("note");
          } finally {
            new S96();
            send("msg3");
            new S42();
            new S57();
          }
        } catch (IOException e) {
          send("msg3");
          send("msg18");
          send("msg11");
        }
        send("msg3");
        break;
    }
    switch (event) {
      case EV2493:
        new S94();
        send("msg6");
        break;
      case EV2494:
        if (x0 > 0) {
          send("msg12");
          send("msg11");
        } else {
          try {
            new S38();
            log("note");
          } catch (IllegalStateException e) {
            send("msg11");
            send("msg4");
          } catch (IllegalStateException e) {
            new S18();
            send("msg12");
            send("msg0");
            new S94();
          }
          send("msg6");
        }
        send("msg19");
        log("note");
        break;
    }
    log("note");
    log("note");
  }
  void tick() {
    if (x5 > 0) {
      if (x7 > 0) {
        new S75();
        send("msg11");
        log("note");
      }
      new S4();
    }
    try {
      if (x1 > 0) {
        switch (event) {
          case EV2495:
            send("msg13");
            log("note");
            break;
          case EV2496:
            new S76();
            send("msg15");
            new S83();
            break;
          case EV2497:
            new S97();
            send("msg10");
            break;
        }
        send("msg8");
        log("note");
        log("note");
      }
      try {
        log("note");
        new S26();
        send("msg1");
        switch (event) {
          case EV2498:
            log("note");
            send("msg3");
            send("msg12");
            new S71();
            break;
          case EV2499:
            new S20();
            new State();
            new S42();
            send("msg7");
            break;
          case EV2500:
            new S87();
            send("msg13");
            send("msg13");
            new S42();
            break;
        }
      } catch (IOException e) {
        new S53();
        if (x0 > 0) {
          send("msg4");
          new S94();
          send("msg0");
        } else {
          send("msg18");
        }
        new S88();
        new Helper();
      }
      switch (event) {
        case EV2501:
          send("msg7");
          break;
      }
    } catch (IOException e) {
      new S75();
      log("note");
      log("note");
      new S22();
    } catch (TimeoutException e) {
      new S91();
      send("msg9");
      send("msg17");
      new S12();
    }
    send("msg18");
  }
  public void reset() {
    send("msg10");
  }
  public void open() {
    new S33();
  }
  void close() {
    switch (event) {
      case EV2502:
        switch (event) {
          case EV2503:
            send("msg12");
            if (x6 > 0) {
              send("msg5");
            } else {
              send("msg18");
              log("note");
              new S6();
            }
            break;
          case EV2504:
            log("note");
            if (x9 > 0) {
              send("msg6");
              send("msg14");
              new S76();
              send("msg1");
            } else {
              new S34();
              new S30();
              new S40();
              send("msg6");
            }
            break;
        }
        break;
      case EV2505:
        new S21();
        send("msg19");
        break;
      case EV2506:
        send("msg18");
        log("note");
        break;
    }
    send("msg1");
  }
  public void start() {
    send("msg14");
    log("note");
    send("msg15");
    new S27();
  }
  void stop() {
    if (x9 > 0) {
      if (x3 > 0) {
        new S87();
      }
      new S23();
    }
  }
  public void pause() {
    send("msg0");
  }
}
