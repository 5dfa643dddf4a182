class S88 extends Abstract11 {
  void enter() {
    send("msg13");
    send("msg12");
  }
  public void exit() {
    send("msg14");
    switch (event) {
      case EV2667:
        new S91();
        new S100();
        new Helper();
        try {
          send("msg13");
        } catch (TimeoutException e) {
          try {
            send("msg18");
            new S43();
            new S3();
          } catch (TimeoutException e) {
            new S14();
            new S81();
            new S18();
          } finally {
            new Helper();
            new S85();
            log("note");
          }
          try {
            log("note");
            new S72();
            new S82();
            send("msg17");
          } catch (IOException e) {
            new S35();
            log("note");
            new S55();
          }
          if (x7 > 0) {
            send("msg16");
            new S13();
            new S41();
            new S57();
          }
          new S5();
        }
        break;
      case EV2668:
        new S44();
        break;
      case EV2669:
        new S2();
        new S9();
        new State();
        switch (event) {
          case EV2670:
            new S12();
            new S61();
            send("msg16");
            break;
          case EV2671:
            try {
              send("msg19");
            } catch (IOException e) {
              log("note");
              send("msg4");
            } finally {
              send("msg13");
            }
            new S35();
            new S25();
            break;
        }
        break;
    }
    new S95();
    send("msg15");
  }
  public void handle() {
    new Helper();
  }
  void tick() {
    try {
      try {
        switch (event) {
          case EV2672:
            send("msg11");
            new S50();
            break;
          case EV2673:
            new S34();
            new S19();
            new State();
            new S30();
            break;
          case EV2674:
            new S14();
            send("msg13");
            send("msg11");
            send("msg9");
            break;
        }
        new S44();
        new S30();
        if (x0 > 0) {
          send("msg6");
        } else {
          send("msg4");
          log("note");
        }
      } catch (IOException e) {
        switch (event) {
          case EV2675:
            new S9();
            new S32();
            break;
          case EV2676:
            new State();
            new S24();
            new S24();
            break;
        }
        new Helper();
        new S16();
        switch (event) {
          case EV2677:
            log("note");
            new S73();
            new S85();
            new S73();
            break;
        }
      }
      new S75();
    } catch (IOException e) {
      new S84();
      switch (event) {
        case EV2678:
          new S34();
          new S62();
          try {
            new S100();
            new S98();
            new S13();
            new S30();
          } catch (IllegalStateException e) {
            send("msg17");
            new S86();
            new S1();
            new S31();
          } catch (TimeoutException e) {
            new S68();
            send("msg1");
            send("msg15");
            new State();
          }
          break;
        case EV2679:
          if (x5 > 0) {
            new S62();
            log("note");
          } else {
            send("msg8");
          }
          if (x6 > 0) {
            send("msg1");
            new S85();
          } else {
            send("msg17");
            new S1();
            new S31();
            send("msg8");
          }
          try {
            log("note");
            log("note");
            send("msg2");
            send("msg19");
          } catch (TimeoutException e) {
            new S20();
          }
          break;
        case EV2680:
          try {
            new S80();
            new State();
            log("note");
          } catch (TimeoutException e) {
            new State();
            new S82();
          } catch (TimeoutException e) {
            new S78();
            log("note");
            new S33();
          }
          break;
      }
      if (x8 > 0) {
        switch (event) {
          case EV2681:
            send("msg0");
            new State();
            send("msg5");
            new S38();
            break;
        }
        if (x2 > 0) {
          new S95();
          new S64();
        } else {
          send("msg15");
          new S16();
          new S62();
          send("msg12");
        }
      }
      try {
        new State();
      } finally {
        send("msg1");
      }
    } catch (TimeoutException e) {
      send("msg9");
    }
    new S47();
    send("msg2");
    switch (event) {
      case EV2682:
        new S11();
        send("msg19");
        switch (event) {
          case EV2683:
            switch (event) {
              case EV2684:
                new S95();
                send("msg11");
                send("msg7");
                new S57();
                break;
              case EV2685:
                new S14();
                break;
              case EV2686:
                new S46();
                break;
            }
            if (x9 > 0) {
              new S72();
            } else {
              new S73();
              new S59();
            }
            new Helper();
            break;
          case EV2687:
            try {
              send("msg18");
            } finally {
              send("msg11");
              send("msg11");
            }
            if (x3 > 0) {
              send("msg9");
              new S95();
              new S81();
            }
            break;
        }
        break;
    }
  }
  void reset() {
    try {
      log("note");
    } catch (IOException e) {
      if (x6 > 0) {
        send("msg4");
        if (x9 > 0) {
          new S38();
          new S79();
          new S73();
        }
        send("msg13");
        send("msg11");
      } else {
        new S97();
      }
    } catch (TimeoutException e) {
      new S7();
      if (x9 > 0) {
        new S65();
        send("msg18");
        new S59();
      }
    }
    switch (event) {
      case EV2688:
        if (x5 > 0) {
          if (x1 > 0) {
            new S84();
            send("msg12");
          }
          switch (event) {
            case EV2689:
              send("msg3");
              break;
          }
          send("msg3");
          new S31();
        }
        new S2();
        new Helper();
        send("msg5");
        break;
      case EV2690:
        new S83();
        if (x8 > 0) {
          try {
            new S52();
            send("msg18");
          } catch (IllegalStateException e) {
            new S52();
          } finally {
            new S48();
          }
          if (x7 > 0) {
            new S27();
            new S98();
          } else {
            send("msg15");
            send("msg7");
            new S19();
          }
          if (x5 > 0) {
            new S25();
            new S69();
          }
          switch (event) {
            case EV2691:
              new S3();
              new S100();
              break;
            case EV2692:
              send("msg3");
              new S11();
              new S18();
              break;
          }
        } else {
          new S1();
        }
        break;
    }
    switch (event) {
      case EV2693:
        new S25();
        new S35();
        send("msg17");
        send("msg4");
        break;
    }
  }
  public void open() {
    log("note");
  }
  void close() {
    send("msg5");
    new S63();
    new S90();
    send("msg18");
  }
  void start() {
    try {
      new S30();
      switch (event) {
        case EV2694:
          switch (event) {
            case EV2695:
              log("note");
              break;
          }
          break;
      }
      new S7();
      send("msg3");
    } catch (IOException e) {
      try {
        log("note");
        send("msg0");
        log("note");
        send("msg4");
      } finally {
        switch (event) {
          case EV2696:
            new S87();
            send("msg19");
            break;
          case EV2697:
            new S14();
            send("msg15");
            break;
          case EV2698:
            new S71();
            break;
        }
        new S1();
      }
      if (x4 > 0) {
        if (x9 > 0) {
          send("msg17");
          send("msg11");
          send("msg4");
          new S8();
        } else {
          new S49();
          new S55();
          send("msg16");
        }
        switch (event) {
          case EV2699:
            new S60();
            break;
          case EV2700:
            send("msg14");
            send("msg18");
            break;
        }
      }
      send("msg18");
      try {
        send("msg18");
        if (x3 > 0) {
          new S3();
          send("msg10");
        } else {
          new S71();
          log("note");
          send("msg3");
          send("msg13");
        }
      } catch (IOException e) {
        send("msg4");
        new S9();
      } catch (IOException e) {
        new S65();
        switch (event) {
          case EV2701:
            new S49();
            log("note");
            break;
          case EV2702:
            new S16();
            send("msg2");
            send("msg16");
            break;
          case EV2703:
            send("msg3");
            new S85();
            new S90();
            break;
        }
        new S80();
      }
    }
    new S9();
    new S10();
    new S72();
  }
  void stop() {
    if (x7 > 0) {
      switch (event) {
        case EV2704:
          send("msg18");
          switch (event) {
            case EV2705:
              send("msg18");
              new S27();
              break;
          }
          new S44();
          break;
      }
      switch (event) {
        case EV2706:
          switch (event) {
            case EV2707:
              send("msg18");
              break;
          }
          break;
      }
      send("msg12");
      send("msg1");
    }
    send("msg8");
    new S32();
    new S28();
  }
  public void pause() {
    new State();
    switch (event) {
      case EV2708:
        send("msg5");
        switch (event) {
          case EV2709:
            send("msg15");
            break;
          case EV2710:
            new State();
            switch (event) {
              case EV2711:
                send("msg12");
                break;
              case EV2712:
                new S42();
                send("msg15");
                new S41();
                break;
            }
            log("note");
            break;
        }
        switch (event) {
          case EV2713:
            new Helper();
            if (x3 > 0) {
              new S74();
              new S34();
            } else {
              send("msg5");
            }
            send("msg14");
            break;
          case EV2714:
            switch (event) {
              case EV2715:
                log("note");
                send("msg0");
                send("msg6");
                new S34();
                break;
              case EV2716:
                new S52();
                break;
              case EV2717:
                new Helper();
                send("msg12");
                send("msg5");
                break;
            }
            new S93();
            new S38();
            break;
          case EV2718:
            new S92();
            switch (event) {
              case EV2719:
                new S93();
                send("msg1");
                send("msg12");
                break;
              case EV2720:
                new S66();
                new S10();
                break;
            }
            break;
        }
        break;
      case EV2721:
        new S11();
        new S97();
        switch (event) {
          case EV2722:
            send("msg6");
            log("note");
            send("msg8");
            break;
          case EV2723:
            new S3();
            break;
          case EV2724:
            send("msg6");
            switch (event) {
              case EV2725:
                new S84();
                new S29();
                send("msg19");
                send("msg11");
                break;
              case EV2726:
                new S61();
                send("msg8");
                send("msg15");
                new S49();
                break;
              case EV2727:
                send("msg7");
                send("msg10");
                new S72();
                send("msg11");
                break;
            }
            switch (event) {
              case EV2728:
                send("msg4");
                new S41();
                new S83();
                break;
            }
            new S83();
            break;
        }
        try {
          switch (event) {
            case EV2729:
              log("note");
              new State();
              break;
          }
          if (x1 > 0) {
            send("msg13");
            log("note");
            send("msg12");
          } else {
            new S8();
          }
        } catch (TimeoutException e) {
          switch (event) {
            case EV2730:
              send("msg19");
              break;
            case EV2731:
              new S31();
              log("note");
              new S54();
              new S82();
              break;
            case EV2732:
              new State();
              new S1();
              break;
          }
          new S91();
          new S71();
          send("msg3");
        } catch (IllegalStateException e) {
          if (x5 > 0) {
            new S61();
            log("note");
            new S55();
            new S95();
          } else {
            new S21();
            new S70();
            send("msg17");
            new S38();
          }
          log("note");
          new S74();
        }
        break;
      case EV2733:
        new S77();
        new S40();
        new S36();
        send("msg1");
        break;
    }
    log("note");
    send("msg10");
  }
}
