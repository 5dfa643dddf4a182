class S86 extends State {
  void enter() {
    new State();
    new S90();
    switch (event) {
      case EV2604:
        switch (event) {
          case EV2605:
            new S15();
            switch (event) {
              case EV2606:
                new Helper();
                new S81();
                new S28();
                send("msg16");
                break;
              case EV2607:
                new S37();
                log("note");
                new State();
                send("msg13");
                break;
            }
            new S28();
            break;
          case EV2608:
            new S76();
            new S81();
            send("msg1");
            new S27();
            break;
          case EV2609:
            new S67();
            break;
        }
        break;
      case EV2610:
        log("note");
        new S39();
        new S85();
        break;
      case EV2611:
        new S70();
        new S37();
        break;
    }
    send("msg3");
  }
  void exit() {
    new State();
  }
  void handle() {
    new S35();
    send("msg16");
    try {
      try {
        send("msg12");
        new S63();
        send("msg17");
      } catch (IOException e) {
        new S81();
        try {
          log("note");
          send("msg4");
          new S69();
        } catch (IOException e) {
          new S52();
          new S8();
          send("msg12");
        } finally {
          new S56();
          new S71();
        }
        new S23();
        new State();
      } catch (IllegalStateException e) {
        new Helper();
      }
      new S19();
    } catch (TimeoutException e) {
      new S54();
    } catch (TimeoutException e) {
      send("msg16");
    }
    switch (event) {
      case EV2612:
        if (x0 > 0) {
          send("msg5");
          try {
            new S99();
          } finally {
            log("note");
          }
          try {
            new S52();
            send("msg19");
          } catch (TimeoutException e) {
            new S60();
            new S42();
            new S53();
          } catch (IOException e) {
            new S93();
            send("msg17");
          }
        } else {
          if (x8 > 0) {
            new S55();
            send("msg17");
            new S73();
            send("msg5");
          } else {
            send("msg0");
            new S85();
          }
          send("msg4");
          try {
            new S30();
            send("msg18");
          } catch (IOException e) {
            new State();
            send("msg8");
            send("msg18");
            send("msg2");
          }
        }
        send("msg18");
        new S74();
        try {
          switch (event) {
            case EV2613:
              send("msg8");
              send("msg0");
              send("msg11");
              log("note");
              break;
          }
          new S36();
          try {
            new S47();
            new Helper();
          } catch (IOException e) {
            send("msg5");
            new S58();
            send("msg17");
            new S89();
          }
        } catch (TimeoutException e) {
          new S80();
          if (x9 > 0) {
            new S90();
            send("msg4");
            new S39();
          }
          if (x9 > 0) {
            new S13();
            log("note");
            new S54();
          } else {
            new S36();
          }
        } catch (IllegalStateException e) {
          new S18();
          send("msg18");
        }
        break;
    }
  }
  public void tick() {
    switch (event) {
      case EV2614:
        if (x8 > 0) {
          new S40();
          send("msg19");
        } else {
          new S42();
          send("msg19");
          if (x5 > 0) {
            send("msg14");
            new S20();
          }
          try {
            send("msg14");
            send("msg10");
            send("msg19");
          } catch (TimeoutException e) {
            new S38();
            new S41();
            send("msg5");
          } catch (IllegalStateException e) {
            new S14();
            send("msg0");
          }
        }
        new Helper();
        send("msg12");
        break;
      case EV2615:
        if (x7 > 0) {
          new S28();
        }
        if (x4 > 0) {
          new S93();
          log("note");
        }
        new S94();
        new S9();
        break;
    }
    new S56();
    log("note");
  }
  void reset() {
    new S33();
    if (x6 > 0) {
      send("msg2");
      new S10();
      send("msg19");
    }
  }
  void open() {
    new S33();
    if (x9 > 0) {
      new S44();
      try {
        send("msg9");
      } catch (IllegalStateException e) {
        switch (event) {
          case EV2616:
            new S54();
            break;
        }
        if (x6 > 0) {
          new S39();
          send("msg18");
          log("note");
          log("note");
        }
      }
      new Helper();
    }
    switch (event) {
      case EV2617:
        log("note");
        new S1();
        send("msg4");
        break;
      case EV2618:
        if (x2 > 0) {
          send("msg18");
          if (x5 > 0) {
            log("note");
            new S94();
            new Helper();
            new S34();
          } else {
            send("msg0");
            log("note");
            new S46();
            send("msg16");
          }
          try {
            new S64();
            new S77();
            new Helper();
            send("msg2");
          } catch (IOException e) {
            new S50();
            send("msg6");
          } catch (IOException e) {
            send("msg13");
            send("msg3");
          }
        }
        break;
    }
    new State();
  }
  public void close() {
    switch (event) {
      case EV2619:
        new S36();
        new Helper();
        try {
          if (x1 > 0) {
            new S87();
            new S80();
            new S41();
          } else {
            log("note");
            new Helper();
            log("note");
          }
          send("msg15");
          send("msg11");
        } catch (TimeoutException e) {
          try {
            new S58();
          } catch (TimeoutException e) {
            send("msg9");
            new S75();
          } finally {
            new S45();
            new S13();
            send("msg4");
            new S23();
          }
        }
        break;
      case EV2620:
        try {
          send("msg11");
        } finally {
          new S62();
          switch (event) {
            case EV2621:
              send("msg8");
              send("msg0");
              new State();
              log("note");
              break;
          }
        }
        try {
          if (x4 > 0) {
            new Helper();
            send("msg11");
          }
        } catch (IllegalStateException e) {
          switch (event) {
            case EV2622:
              new S98();
              break;
            case EV2623:
              new S25();
              log("note");
              break;
            case EV2624:
              send("msg18");
              break;
          }
          new S93();
        }
        break;
    }
  }
  void start() {
    new S87();
    if (x5 > 0) {
      try {
        log("note");
        send("msg0");
      } finally {
        new S65();
        send("msg13");
      }
    }
    new State();
  }
  void stop() {
    new S29();
    send("msg18");
    send("msg5");
    switch (event) {
      case EV2625:
        new S10();
        try {
          if (x8 > 0) {
            new S38();
            new S24();
            send("msg0");
          } else {
            new S68();
          }
          if (x6 > 0) {
            send("msg8");
            send("msg2");
          }
        } finally {
          switch (event) {
            case EV2626:
              new S60();
              break;
            case EV2627:
              send("msg17");
              new S24();
              new S17();
              break;
          }
          switch (event) {
            case EV2628:
              send("msg13");
              new S46();
              break;
            case EV2629:
              send("msg9");
              log("note");
              break;
          }
          new S31();
        }
        new S26();
        break;
      case EV2630:
        new S66();
        try {
          switch (event) {
            case EV2631:
              log("note");
              break;
            case EV2632:
              new S39();
              send("msg11");
              send("msg0");
              new S80();
              break;
            case EV2633:
              new State();
              new S73();
              send("msg16");
              break;
          }
          new State();
        } finally {
          try {
            send("msg10");
            new S89();
          } catch (IllegalStateException e) {
            new S15();
            send("msg12");
            log("note");
            send("msg6");
          }
          switch (event) {
            case EV2634:
              log("note");
              new Helper();
              new S99();
              break;
            case EV2635:
              send("msg8");
              new S43();
              send("msg5");
              break;
            case EV2636:
              log("note");
              send("msg13");
              new State();
              break;
          }
        }
        switch (event) {
          case EV2637:
            log("note");
            switch (event) {
              case EV2638:
                new S3();
                log("note");
                break;
              case EV2639:
                new S87();
                break;
              case EV2640:
                send("msg11");
                break;
            }
            new S87();
            switch (event) {
              case EV2641:
                new S13();
                new S52();
                send("msg0");
                send("msg8");
                break;
              case EV2642:
                new State();
                break;
              case EV2643:
                new S51();
                send("msg7");
                send("msg6");
                break;
            }
            break;
          case EV2644:
            new S59();
            new S10();
            new S91();
            new S50();
            break;
        }
        break;
      case EV2645:
        new S69();
        try {
          new S13();
          send("msg6");
          log("note");
          new S92();
        } catch (IOException e) {
          switch (event) {
            case EV2646:
              new S87();
              send("msg14");
              new S66();
              break;
          }
          try {
            new Helper();
            log("note");
            new S30();
            send("msg12");
          } catch (IllegalStateException e) {
            send("msg4");
          }
          new S7();
          new S85();
        } catch (IOException e) {
          send("msg3");
          send("msg17");
        }
        send("msg19");
        new S84();
        break;
    }
  }
  public void pause() {
    if (x5 > 0) {
      new S54();
    } else {
      new S53();
      log("note");
    }
  }
}
