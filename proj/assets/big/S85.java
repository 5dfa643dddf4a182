class S85 extends Abstract6 {
  public void enter() {
    new S98();
    new State();
    send("msg13");
    try {
      new S68();
      try {
        log("note");
        switch (event) {
          case EV2560:
            send("msg18");
            new State();
            new S52();
            new S97();
            break;
          case EV2561:
            send("msg15");
            break;
        }
      } catch (TimeoutException e) {
        new S30();
        new S3();
      } finally {
        new S94();
        send("msg3");
      }
      if (x4 > 0) {
        send("msg8");
        send("msg16");
      }
      new S25();
    } finally {
      send("msg13");
      new S70();
      send("msg14");
    }
  }
  void exit() {
    new S19();
    new S28();
    log("note");
    new S86();
  }
  void handle() {
    send("msg5");
    new S91();
    switch (event) {
      case EV2562:
        new S58();
        break;
    }
    try {
      send("msg9");
      try {
        try {
          new S81();
          new S23();
          send("msg9");
          new S74();
        } catch (IOException e) {
          new S44();
          new S28();
          send("msg7");
          new S97();
        }
        try {
          new S53();
          new S25();
          new S20();
        } finally {
          new Helper();
          log("note");
          send("msg8");
        }
        new S62();
        send("msg7");
      } catch (IllegalStateException e) {
        send("msg18");
        if (x5 > 0) {
          new Helper();
          send("msg10");
          send("msg7");
        } else {
          log("note");
        }
        if (x1 > 0) {
          send("msg2");
          send("msg16");
          send("msg18");
        } else {
          send("msg3");
          send("msg10");
          new S97();
        }
        try {
          new S79();
          new S49();
          send("msg7");
          new S48();
        } finally {
          send("msg0");
          new S63();
          send("msg13");
        }
      } finally {
        switch (event) {
          case EV2563:
            new S96();
            new S74();
            send("msg10");
            send("msg18");
            break;
          case EV2564:
            log("note");
            break;
        }
      }
      switch (event) {
        case EV2565:
          if (x9 > 0) {
            new S96();
            log("note");
          } else {
            new S42();
            new S81();
            new S94();
            new S44();
          }
          new S58();
          break;
        case EV2566:
          try {
            log("note");
            send("msg15");
            new S51();
            new S41();
          } catch (IllegalStateException e) {
            new S60();
            send("msg11");
            new State();
          }
          switch (event) {
            case EV2567:
              send("msg15");
              new S71();
              break;
            case EV2568:
              send("msg7");
              break;
          }
          new S63();
          break;
      }
    } catch (IllegalStateException e) {
      try {
        new S52();
      } catch (IOException e) {
        if (x3 > 0) {
          new S63();
          new S82();
        } else {
          new S29();
          new S77();
          send("msg9");
          new State();
        }
        try {
          new S74();
        } catch (TimeoutException e) {
          new S74();
          log("note");
          send("msg15");
          log("note");
        }
      }
      send("msg2");
    } finally {
      if (x3 > 0) {
        send("msg1");
        switch (event) {
          case EV2569:
            new S36();
            new S63();
            send("msg7");
            break;
          case EV2570:
            send("msg0");
            send("msg0");
            break;
          case EV2571:
            send("msg17");
            send("msg11");
            send("msg10");
            new S96();
            break;
        }
      }
    }
  }
  void tick() {
    new S35();
    send("msg0");
    send("msg7");
    if (x8 > 0) {
      new S64();
    } else {
      new S34();
      new S59();
      if (x0 > 0) {
        if (x2 > 0) {
          log("note");
          new S4();
        } else {
          send("msg15");
          new S99();
          new Helper();
        }
        send("msg3");
      } else {
        new S73();
      }
      send("msg16");
    }
  }
  public void reset() {
    switch (event) {
      case EV2572:
        log("note");
        break;
    }
    switch (event) {
      case EV2573:
        new S52();
        new State();
        send("msg1");
        send("msg7");
        break;
      case EV2574:
        new S91();
        break;
    }
    log("note");
  }
  void open() {
    send("msg9");
    send("msg16");
  }
  void close() {
    log("note");
    try {
      log("note");
      new State();
    } catch (TimeoutException e) {
      try {
        send("msg17");
      } catch (IOException e) {
        new S58();
      } finally {
        if (x9 > 0) {
          send("msg1");
          send("msg18");
        }
      }
      switch (event) {
        case EV2575:
          new S91();
          switch (event) {
            case EV2576:
              new S34();
              break;
            case EV2577:
              new State();
              send("msg16");
              break;
          }
          break;
        case EV2578:
          new Helper();
          new S36();
          break;
      }
      switch (event) {
        case EV2579:
          try {
            new S15();
            new S33();
            new S43();
            new S95();
          } catch (IllegalStateException e) {
            new S23();
            new S15();
            new State();
          }
          send("msg8");
          switch (event) {
            case EV2580:
              send("msg17");
              new S13();
              new S47();
              send("msg18");
              break;
            case EV2581:
              new S12();
              new S61();
              log("note");
              send("msg8");
              break;
          }
          break;
      }
      send("msg9");
    } catch (IllegalStateException e) {
      new S95();
      new Helper();
      new S1();
    }
  }
  public void start() {
    new S92();
    try {
      switch (event) {
        case EV2582:
          new S28();
          send("msg0");
          try {
            send("msg3");
            new S51();
            send("msg5");
          } catch (TimeoutException e) {
            send("msg10");
            new Helper();
            new S95();
          } finally {
            send("msg5");
            log("note");
            new S57();
          }
          break;
        case EV2583:
          switch (event) {
            case EV2584:
              send("msg12");
              break;
          }
          switch (event) {
            case EV2585:
              send("msg9");
              send("msg0");
              send("msg19");
              send("msg6");
              break;
            case EV2586:
              send("msg10");
              new S4();
              new S45();
              break;
            case EV2587:
              new S81();
              new S30();
              break;
          }
          if (x1 > 0) {
            new S23();
          }
          switch (event) {
            case EV2588:
              new S84();
              new S78();
              send("msg0");
              break;
            case EV2589:
              send("msg12");
              send("msg7");
              send("msg3");
              log("note");
              break;
          }
          break;
        case EV2590:
          send("msg11");
          try {
            new State();
            send("msg19");
          } catch (IOException e) {
            log("note");
            send("msg17");
            send("msg15");
          }
          new S31();
          break;
      }
      new S98();
    } catch (TimeoutException e) {
      try {
        switch (event) {
          case EV2591:
            send("msg1");
            send("msg4");
            break;
          case EV2592:
            new S45();
            break;
          case EV2593:
            new S32();
            send("msg4");
            new S85();
            log("note");
            break;
        }
      } catch (IllegalStateException e) {
        if (x3 > 0) {
          new S64();
        } else {
          new S67();
          send("msg18");
          new S62();
          send("msg8");
        }
        try {
          new S12();
          new S20();
          new S47();
          new S78();
        } catch (IllegalStateException e) {
          new S46();
          new S34();
        } catch (TimeoutException e) {
          log("note");
        }
        log("note");
        if (x8 > 0) {
          new S82();
          log("note");
          send("msg18");
        } else {
          send("msg5");
          new S72();
        }
      }
      send("msg15");
      switch (event) {
        case EV2594:
          send("msg16");
          break;
        case EV2595:
          try {
            new S37();
            log("note");
            send("msg16");
          } catch (IOException e) {
            new S17();
          }
          new S21();
          break;
      }
    }
    try {
      new S8();
      send("msg11");
    } catch (IllegalStateException e) {
      if (x0 > 0) {
        new S85();
        send("msg10");
        if (x1 > 0) {
          new S93();
          send("msg2");
        } else {
          new S55();
          new S13();
        }
      } else {
        if (x9 > 0) {
          new S11();
          log("note");
          send("msg3");
        }
        new S56();
      }
      switch (event) {
        case EV2596:
          if (x2 > 0) {
            new S39();
            new Helper();
            send("msg17");
          } else {
            new S81();
            new S42();
            new S64();
            new S23();
          }
          send("msg16");
          break;
        case EV2597:
          send("msg11");
          if (x9 > 0) {
            new S22();
            send("msg2");
            send("msg14");
          } else {
            send("msg9");
          }
          new S75();
          new S58();
          break;
        case EV2598:
          send("msg0");
          log("note");
          new S92();
          break;
      }
    } catch (IllegalStateException e) {
      new S94();
      new S54();
      send("msg2");
    }
  }
  public void stop() {
    try {
      send("msg5");
      if (x1 > 0) {
        if (x7 > 0) {
          send("msg9");
          send("msg9");
        }
        new S78();
        new S37();
        if (x3 > 0) {
          new S7();
        }
      } else {
        send("msg10");
        if (x9 > 0) {
          send("msg13");
        } else {
          log("note");
        }
      }
      new S70();
      log("note");
    } catch (IOException e) {
      new S80();
      send("msg11");
    } finally {
      send("msg7");
      if (x1 > 0) {
        log("note");
        new S63();
        new S38();
      } else {
        switch (event) {
          case EV2599:
            send("msg5");
            break;
          case EV2600:
            send("msg17");
            break;
        }
        new S84();
        if (x2 > 0) {
          new S31();
          new S35();
          log("note");
          log("note");
        } else {
          new S87();
          new S37();
          new S72();
          log("note");
        }
        if (x7 > 0) {
          new S51();
        } else {
          send("msg17");
          new S71();
          new S100();
        }
      }
      try {
        switch (event) {
          case EV2601:
            new S84();
            break;
        }
        new State();
      } catch (IllegalStateException e) {
        if (x3 > 0) {
          log("note");
          send("msg2");
          new S23();
          send("msg11");
        }
        new S75();
        if (x9 > 0) {
          new S63();
          send("msg2");
        }
        send("msg4");
      }
    }
    send("msg13");
  }
  public void pause() {
    switch (event) {
      case EV2602:
        new S39();
        break;
      case EV2603:
        try {
          send("msg7");
          try {
            send("msg6");
            log("note");
            new S71();
            new S43();
          } catch (IllegalStateException e) {
            send("msg16");
            send("msg11");
            send("msg6");
          } finally {
            new S35();
            new S96();
            new S55();
            new S8();
          }
          send("msg19");
        } finally {
          new S90();
          try {
            log("note");
          } catch (TimeoutException e) {
            log("note");
            new S38();
            new S23();
          } catch (TimeoutException e) {
            new S55();
            new S25();
            new S46();
            new S19();
          }
        }
        break;
    }
  }
}
