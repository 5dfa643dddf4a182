class S21 extends Abstract5 {
  void enter() {
    log("note");
    send("msg14");
    if (x7 > 0) {
      send("msg11");
    } else {
      try {
        new S69();
        switch (event) {
          case EV603:
            new S54();
            break;
          case EV604:
            log("note");
            new S8();
            new S21();
            send("msg0");
            break;
          case EV605:
            send("msg13");
            send("msg8");
            send("msg11");
            break;
        }
        send("msg5");
        try {
          send("msg18");
          new S98();
          send("msg0");
        } catch (TimeoutException e) {
          new S6();
        } finally {
          new S1();
          new S4();
          send("msg0");
          send("msg8");
        }
      } catch (IOException e) {
        new S96();
        new S3();
      } catch (TimeoutException e) {
        log("note");
        new S2();
        switch (event) {
          case EV606:
            new State();
            break;
        }
      }
      new S63();
    }
  }
  void exit() {
    new S26();
    new S39();
    new S75();
    new S69();
  }
  void handle() {
    new S41();
    send("msg10");
    switch (event) {
      case EV607:
        send("msg8");
        switch (event) {
          case EV608:
            send("msg13");
            break;
          case EV609:
            switch (event) {
              case EV610:
                send("msg4");
                log("note");
                break;
              case EV611:
                send("msg12");
                send("msg16");
                log("note");
                send("msg17");
                break;
            }
            break;
          case EV612:
            new S39();
            switch (event) {
              case EV613:
                new S62();
                new S52();
                new S19();
                break;
              case EV614:
                log("note");
                new S64();
                break;
            }
            switch (event) {
              case EV615:
                new S63();
                new S66();
                break;
              case EV616:
                new S65();
                new S63();
                new S38();
                send("msg15");
                break;
            }
            switch (event) {
              case EV617:
                new S40();
                new S66();
                log("note");
                new State();
                break;
              case EV618:
                new S88();
                new S12();
                new S38();
                break;
              case EV619:
                new S63();
                send("msg9");
                break;
            }
            break;
        }
        new Helper();
        log("note");
        break;
    }
  }
  void tick() {
    log("note");
  }
  void reset() {
    new S79();
    try {
      new S26();
      switch (event) {
        case EV620:
          new S35();
          new Helper();
          send("msg15");
          break;
        case EV621:
          send("msg10");
          switch (event) {
            case EV622:
              send("msg4");
              break;
            case EV623:
              new S28();
              log("note");
              break;
            case EV624:
              send("msg3");
              new State();
              break;
          }
          send("msg2");
          break;
      }
    } catch (TimeoutException e) {
      switch (event) {
        case EV625:
          log("note");
          switch (event) {
            case EV626:
              new S33();
              new S54();
              break;
            case EV627:
              new S36();
              new S73();
              new Helper();
              send("msg1");
              break;
            case EV628:
              new S28();
              send("msg11");
              log("note");
              break;
          }
          switch (event) {
            case EV629:
              send("msg12");
              new S77();
              new S62();
              break;
            case EV630:
              new S75();
              new State();
              break;
          }
          try {
            new S50();
            log("note");
          } catch (IllegalStateException e) {
            new S95();
          }
          break;
      }
      new S68();
      try {
        send("msg2");
      } catch (TimeoutException e) {
        send("msg19");
        new S92();
        new S50();
      }
    }
    send("msg5");
  }
  void open() {
    new S1();
  }
  void close() {
    new S57();
    try {
      send("msg8");
      new S97();
      new S31();
    } catch (IllegalStateException e) {
      new Helper();
      if (x3 > 0) {
        send("msg11");
        new S59();
        new S53();
        send("msg16");
      }
      send("msg16");
    }
    new S2();
  }
  void start() {
    new S66();
    new S42();
    new S37();
    switch (event) {
      case EV631:
        log("note");
        new S85();
        break;
    }
  }
  void stop() {
    send("msg1");
    switch (event) {
      case EV632:
        if (x7 > 0) {
          try {
            new S49();
          } catch (TimeoutException e) {
            log("note");
          }
        }
        if (x4 > 0) {
          switch (event) {
            case EV633:
              send("msg2");
              break;
            case EV634:
              new S19();
              break;
          }
          try {
            send("msg12");
            new S18();
            new S42();
          } finally {
            new S85();
            send("msg2");
            send("msg14");
          }
          if (x9 > 0) {
            new S13();
            new S77();
            new S70();
            log("note");
          }
          send("msg19");
        } else {
          switch (event) {
            case EV635:
              send("msg17");
              break;
            case EV636:
              send("msg11");
              new State();
              send("msg13");
              new S82();
              break;
            case EV637:
              log("note");
              break;
          }
        }
        try {
          new S92();
          new S11();
          new S4();
        } catch (TimeoutException e) {
          send("msg18");
          switch (event) {
            case EV638:
              new Helper();
              break;
          }
          send("msg18");
        } finally {
          send("msg19");
          new S34();
          if (x8 > 0) {
            send("msg17");
          }
          switch (event) {
            case EV639:
              send("msg11");
              new S39();
              new S47();
              break;
          }
        }
        break;
      case EV640:
        if (x7 > 0) {
          new S32();
          send("msg3");
        } else {
          if (x1 > 0) {
            new S15();
            send("msg6");
            send("msg7");
            new S30();
          }
          switch (event) {
            case EV641:
              new S64();
              new S68();
              new S86();
              break;
          }
          new S32();
        }
        send("msg13");
        break;
      case EV642:
        new S3();
        switch (event) {
          case EV643:
            try {
              new S3();
            } catch (IllegalStateException e) {
              log("note");
              new S55();
              new Helper();
              send("msg5");
            }
            break;
        }
        new S90();
        break;
    }
    new S88();
    switch (event) {
      case EV644:
        new S6();
        break;
      case EV645:
        send("msg4");
        new S61();
        break;
    }
  }
  public void pause() {
    send("msg12");
    try {
      send("msg17");
      if (x9 > 0) {
        send("msg17");
        if (x7 > 0) {
          new S7();
          send("msg11");
          send("msg13");
        } else {
          send("msg4");
          new S68();
          log("note");
          new State();
        }
        switch (event) {
          case EV646:
            send("msg14");
            new S61();
            new S63();
            new Helper();
            break;
          case EV647:
            new S23();
            break;
        }
      }
      log("note");
    } catch (IllegalStateException e) {
      switch (event) {
        case EV648:
          send("msg13");
          log("note");
          break;
        case EV649:
          new S17();
          new S73();
          switch (event) {
            case EV650:
              new S95();
              break;
          }
          try {
            log("note");
          } catch (TimeoutException e) {
            new S17();
            new S65();
          }
          break;
      }
    }
    try {
      switch (event) {
        case EV651:
          new S52();
          switch (event) {
            case EV652:
              new S41();
              break;
            case EV653:
              new S61();
              break;
          }
          send("msg3");
          break;
      }
      send("msg16");
    } catch (IOException e) {
      switch (event) {
        case EV654:
          log("note");
          new S12();
          send("msg6");
          break;
        case EV655:
          send("msg10");
          break;
        case EV656:
          if (x4 > 0) {
            new State();
            new S96();
            new S73();
            new Helper();
          } else {
            send("msg17");
            send("msg11");
          }
          send("msg0");
          break;
      }
    } catch (TimeoutException e) {
      log("note");
      send("msg6");
      new S5();
    }
  }
}
