class S79 extends Abstract4 {
  void enter() {
    new S72();
  }
  public void exit() {
    send("msg11");
    if (x0 > 0) {
      new S45();
      send("msg19");
      switch (event) {
        case EV2416:
          new Helper();
          break;
        case EV2417:
          if (x3 > 0) {
            new S42();
            send("msg5");
          } else {
            new S2();
            new S13();
          }
          break;
        case EV2418:
          new S54();
          try {
            send("msg19");
            new State();
          } catch (TimeoutException e) {
            new Helper();
            new S3();
          } catch (TimeoutException e) {
            send("msg6");
            new S95();
          }
          send("msg13");
          break;
      }
    } else {
      if (x1 > 0) {
        new S87();
      }
      if (x6 > 0) {
        if (x9 > 0) {
          new S69();
        } else {
          send("msg6");
        }
        if (x7 > 0) {
          new S10();
          new S19();
          new S69();
          send("msg4");
        } else {
          send("msg2");
          new S16();
          send("msg19");
        }
        try {
          new S58();
          log("note");
          new S66();
          new S55();
        } catch (IllegalStateException e) {
          new S100();
        }
      } else {
        new Helper();
        switch (event) {
          case EV2419:
            new S9();
            send("msg14");
            send("msg12");
            break;
          case EV2420:
            send("msg5");
            new S15();
            break;
          case EV2421:
            new S75();
            send("msg8");
            break;
        }
        send("msg3");
      }
    }
    log("note");
    send("msg13");
  }
  void handle() {
    log("note");
  }
  void tick() {
    send("msg15");
    switch (event) {
      case EV2422:
        send("msg15");
        send("msg19");
        new S51();
        try {
          switch (event) {
            case EV2423:
              new S32();
              new Helper();
              break;
          }
          send("msg8");
        } catch (TimeoutException e) {
          if (x6 > 0) {
            new S95();
          }
          send("msg4");
          new S73();
        } catch (IOException e) {
          new S95();
          send("msg16");
          send("msg5");
          send("msg7");
        }
        break;
    }
  }
  void reset() {
    if (x5 > 0) {
      new S44();
      new S64();
      log("note");
    }
    new S89();
    try {
      if (x0 > 0) {
        send("msg13");
        try {
          send("msg18");
          new S69();
        } catch (TimeoutException e) {
          new S86();
          send("msg0");
          new S35();
        }
        if (x9 > 0) {
          send("msg6");
          new S81();
        }
        send("msg7");
      } else {
        send("msg3");
        if (x9 > 0) {
          send("msg17");
          send("msg7");
        }
        try {
          send("msg5");
          send("msg6");
        } catch (IllegalStateException e) {
          send("msg5");
        } catch (IllegalStateException e) {
          send("msg3");
          log("note");
          send("msg15");
        }
        log("note");
      }
      switch (event) {
        case EV2424:
          log("note");
          break;
        case EV2425:
          switch (event) {
            case EV2426:
              send("msg4");
              new S66();
              new S14();
              new S18();
              break;
          }
          switch (event) {
            case EV2427:
              log("note");
              send("msg12");
              send("msg0");
              new S21();
              break;
          }
          break;
        case EV2428:
          if (x1 > 0) {
            send("msg0");
            new S71();
            new S68();
            send("msg1");
          }
          new S61();
          break;
      }
      new S37();
      new S96();
    } catch (TimeoutException e) {
      new S10();
    } finally {
      new S78();
    }
  }
  void open() {
    new S47();
    try {
      if (x7 > 0) {
        send("msg4");
        new S41();
        log("note");
      } else {
        send("msg10");
        new S43();
        new S9();
      }
      new S45();
      new S4();
    } catch (TimeoutException e) {
      new S76();
    }
    if (x6 > 0) {
      switch (event) {
        case EV2429:
          if (x7 > 0) {
            new S7();
            new S98();
          }
          break;
        case EV2430:
          try {
            new S10();
          } finally {
            new S40();
          }
          if (x6 > 0) {
            send("msg19");
          }
          new S93();
          break;
      }
      new S26();
      log("note");
      new S96();
    }
  }
  void close() {
    log("note");
    switch (event) {
      case EV2431:
        switch (event) {
          case EV2432:
            send("msg0");
            break;
        }
        new S72();
        new S48();
        send("msg3");
        break;
      case EV2433:
        new S33();
        send("msg9");
        send("msg12");
        break;
      case EV2434:
        new S77();
        break;
    }
    new S59();
  }
  public void start() {
    try {
      switch (event) {
        case EV2435:
          new Helper();
          break;
        case EV2436:
          send("msg3");
          new S56();
          break;
        case EV2437:
          switch (event) {
            case EV2438:
              new S12();
              break;
            case EV2439:
              new State();
              new S88();
              send("msg6");
              new S96();
              break;
          }
          new S48();
          new S10();
          new S100();
          break;
      }
    } catch (IllegalStateException e) {
      send("msg14");
      new S90();
      new S6();
      try {
        switch (event) {
          case EV2440:
            new S30();
            break;
          case EV2441:
            new S74();
            send("msg5");
            new S83();
            break;
          case EV2442:
            new S66();
            new S88();
            break;
        }
        new S66();
        switch (event) {
          case EV2443:
            new S37();
            break;
        }
        new S6();
      } catch (IllegalStateException e) {
        send("msg6");
      }
    } catch (IllegalStateException e) {
      new S90();
    }
    new S100();
    new S89();
    new S24();
  }
  void stop() {
    new S59();
    try {
      if (x4 > 0) {
        switch (event) {
          case EV2444:
            send("msg10");
            break;
          case EV2445:
            send("msg2");
            new S56();
            new S84();
            break;
        }
      } else {
        try {
          new S61();
          send("msg14");
        } catch (IOException e) {
          send("msg4");
        }
      }
      try {
        if (x2 > 0) {
          new S11();
          new S35();
          log("note");
        }
        switch (event) {
          case EV2446:
            new Helper();
            break;
          case EV2447:
            new Helper();
            break;
        }
        try {
          new S90();
          send("msg6");
          new S36();
        } catch (IOException e) {
          new S50();
        }
      } finally {
        try {
          new S42();
          log("note");
          send("msg1");
        } catch (IllegalStateException e) {
          new State();
        }
        if (x6 > 0) {
          new S62();
          new S62();
          new S25();
          new S28();
        } else {
          log("note");
          new S89();
          send("msg15");
        }
        if (x4 > 0) {
          new S72();
        } else {
          send("msg9");
          send("msg6");
          new S12();
          new S16();
        }
        send("msg3");
      }
      log("note");
      try {
        new S67();
        switch (event) {
          case EV2448:
            send("msg6");
            new S70();
            new S69();
            log("note");
            break;
          case EV2449:
            log("note");
            new Helper();
            break;
        }
        switch (event) {
          case EV2450:
            send("msg10");
            new S5();
            send("msg12");
            new S66();
            break;
        }
        new S88();
      } catch (TimeoutException e) {
        if (x2 > 0) {
          send("msg11");
          new S47();
          new S37();
          send("msg15");
        }
        new S88();
      } catch (IOException e) {
        new S82();
      }
    } finally {
      send("msg0");
      new S81();
    }
  }
  void pause() {
    new State();
    if (x9 > 0) {
      if (x8 > 0) {
        new S11();
        try {
          send("msg12");
          new S43();
        } catch (IOException e) {
          send("msg16");
          send("msg4");
          log("note");
        }
        send("msg8");
      } else {
        send("msg0");
        if (x3 > 0) {
          send("msg13");
          log("note");
          send("msg2");
          new S29();
        }
        new S15();
        log("note");
      }
      new S33();
      send("msg1");
      try {
        switch (event) {
          case EV2451:
            log("note");
            send("msg12");
            break;
        }
        send("msg14");
        new S61();
        new S3();
      } catch (IOException e) {
        new S86();
        try {
          new S20();
          log("note");
          new S86();
        } catch (IOException e) {
          new S33();
          log("note");
        } catch (TimeoutException e) {
          send("msg10");
          new S62();
          send("msg4");
          new State();
        }
      } catch (IllegalStateException e) {
        new S28();
        if (x9 > 0) {
          log("note");
          send("msg1");
          log("note");
          log("note");
        } else {
          new S44();
          new S100();
          new S36();
          send("msg19");
        }
        new State();
      }
    }
    new S20();
  }
}
