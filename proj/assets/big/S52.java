class S52 extends Abstract14 {
  void enter() {
    new S11();
    try {
      send("msg13");
      new State();
    } catch (TimeoutException e) {
      switch (event) {
        case EV1547:
          if (x1 > 0) {
            send("msg3");
          } else {
            send("msg11");
            send("msg16");
            send("msg14");
            send("msg11");
          }
          new S11();
          break;
      }
      new S79();
    } finally {
      send("msg4");
    }
    send("msg10");
  }
  void exit() {
    new S55();
    try {
      new S85();
      new S23();
    } finally {
      new S46();
      if (x4 > 0) {
        new S43();
        try {
          send("msg11");
        } catch (IOException e) {
          send("msg4");
          send("msg19");
          new S98();
          new S25();
        } finally {
          new State();
          new S76();
          log("note");
          new S75();
        }
      }
      new S63();
      if (x6 > 0) {
        send("msg16");
      }
    }
    switch (event) {
      case EV1548:
        switch (event) {
          case EV1549:
            new S95();
            break;
          case EV1550:
            log("note");
            new S52();
            break;
        }
        break;
      case EV1551:
        if (x5 > 0) {
          new S93();
        } else {
          if (x0 > 0) {
            new S98();
            new S70();
            new S45();
            send("msg5");
          }
          switch (event) {
            case EV1552:
              new S41();
              break;
            case EV1553:
              send("msg5");
              send("msg19");
              send("msg5");
              new S78();
              break;
          }
        }
        switch (event) {
          case EV1554:
            new S25();
            break;
          case EV1555:
            new S55();
            switch (event) {
              case EV1556:
                new S76();
                send("msg13");
                break;
              case EV1557:
                new S95();
                log("note");
                break;
              case EV1558:
                new S52();
                new S24();
                break;
            }
            break;
        }
        send("msg3");
        break;
      case EV1559:
        switch (event) {
          case EV1560:
            log("note");
            log("note");
            if (x5 > 0) {
              new S96();
              send("msg8");
              new S6();
            }
            break;
        }
        switch (event) {
          case EV1561:
            switch (event) {
              case EV1562:
                new S93();
                send("msg9");
                break;
              case EV1563:
                send("msg3");
                send("msg18");
                send("msg8");
                break;
            }
            switch (event) {
              case EV1564:
                new Helper();
                new S5();
                break;
            }
            new S86();
            send("msg9");
            break;
        }
        send("msg6");
        break;
    }
  }
  public void handle() {
    try {
      try {
        if (x3 > 0) {
          new S21();
          send("msg8");
          new S27();
        }
        switch (event) {
          case EV1565:
            log("note");
            new S40();
            new S45();
            send("msg6");
            break;
          case EV1566:
            send("msg18");
            send("msg17");
            log("note");
            break;
        }
      } catch (IOException e) {
        try {
          send("msg3");
          new S9();
        } catch (TimeoutException e) {
          new S65();
          new S76();
          new State();
          send("msg2");
        }
        new S3();
        switch (event) {
          case EV1567:
            new S89();
            send("msg18");
            new S28();
            new S65();
            break;
          case EV1568:
            new S1();
            new S31();
            new S60();
            new Helper();
            break;
        }
      } finally {
        new S26();
        new S86();
      }
      switch (event) {
        case EV1569:
          new S14();
          break;
        case EV1570:
          log("note");
          try {
            new S65();
          } catch (IOException e) {
            new S92();
          }
          try {
            new S7();
            new S72();
            send("msg10");
          } finally {
            log("note");
            send("msg4");
            send("msg15");
            log("note");
          }
          new S90();
          break;
        case EV1571:
          log("note");
          send("msg3");
          if (x4 > 0) {
            new S24();
            send("msg12");
          } else {
            new S95();
            log("note");
            new State();
            new S4();
          }
          break;
      }
      send("msg6");
    } catch (IOException e) {
      if (x4 > 0) {
        new S26();
        send("msg11");
        if (x4 > 0) {
          send("msg18");
          send("msg3");
        } else {
          new S94();
          new S87();
          new S10();
          new S39();
        }
        send("msg6");
      }
      switch (event) {
        case EV1572:
          try {
            new S51();
            log("note");
          } catch (IOException e) {
            send("msg8");
            new S89();
            new S52();
            new S51();
          }
          try {
            log("note");
            new S70();
            new S29();
            new S72();
          } catch (IOException e) {
            new S36();
            send("msg10");
            send("msg8");
          }
          new S30();
          break;
        case EV1573:
          new S1();
          send("msg18");
          break;
        case EV1574:
          new S98();
          send("msg11");
          if (x5 > 0) {
            new S100();
            send("msg14");
            new S64();
            send("msg6");
          } else {
            new S50();
            log("note");
          }
          break;
      }
    } catch (IOException e) {
      try {
        new S44();
        log("note");
        new S96();
      } catch (IOException e) {
        if (x5 > 0) {
          send("msg12");
          new S64();
          new S98();
        }
      } finally {
        send("msg14");
        log("note");
      }
      new S82();
      try {
        if (x2 > 0) {
          new S54();
        }
        new S28();
        new S99();
        if (x2 > 0) {
          new S76();
        } else {
          new State();
          new S12();
        }
      } catch (IllegalStateException e) {
        send("msg12");
        new S41();
      }
      send("msg15");
    }
    send("msg15");
    send("msg6");
  }
  void tick() {
    new S70();
    if (x0 > 0) {
      new S56();
    } else {
      try {
        switch (event) {
          case EV1575:
            send("msg3");
            new S6();
            new S16();
            send("msg12");
            break;
          case EV1576:
            send("msg6");
            new S43();
            send("msg5");
            send("msg3");
            break;
        }
        switch (event) {
          case EV1577:
            send("msg9");
            new S92();
            break;
        }
        if (x0 > 0) {
          send("msg16");
          new S66();
        } else {
          new S9();
          new S66();
        }
        switch (event) {
          case EV1578:
            send("msg0");
            new S10();
            log("note");
            send("msg4");
            break;
          case EV1579:
            new S99();
            send("msg8");
            send("msg18");
            send("msg18");
            break;
        }
      } catch (IllegalStateException e) {
        try {
          new S55();
          send("msg16");
        } catch (IOException e) {
          send("msg6");
        } catch (TimeoutException e) {
          new S51();
          log("note");
        }
      } catch (IOException e) {
        log("note");
      }
      new S83();
    }
    if (x6 > 0) {
      new S20();
    }
    new S19();
  }
  void reset() {
    if (x6 > 0) {
      send("msg9");
      new S41();
    }
    send("msg4");
    try {
      send("msg6");
      new S73();
    } catch (IOException e) {
      new S19();
      send("msg7");
      new S20();
      new S72();
    } finally {
      send("msg8");
      new S1();
      send("msg10");
      new S9();
    }
    try {
      if (x6 > 0) {
        send("msg1");
        new S66();
        send("msg15");
        send("msg1");
      }
      send("msg17");
      switch (event) {
        case EV1580:
          new S93();
          new S88();
          new S64();
          break;
      }
      try {
        try {
          new S95();
          send("msg0");
          new State();
        } catch (IllegalStateException e) {
          new S92();
          send("msg0");
        } finally {
          send("msg11");
        }
        new S49();
      } catch (TimeoutException e) {
        try {
          send("msg13");
          send("msg8");
        } catch (IllegalStateException e) {
          log("note");
          send("msg2");
          new S81();
          new S94();
        }
      } catch (TimeoutException e) {
        new S64();
        new S15();
      }
    } finally {
      try {
        new S7();
      } finally {
        new S74();
        new S36();
        send("msg13");
      }
      send("msg4");
    }
  }
  void open() {
    new S98();
    log("note");
    send("msg14");
  }
  public void close() {
    switch (event) {
      case EV1581:
        log("note");
        new S78();
        new S88();
        break;
      case EV1582:
        send("msg18");
        switch (event) {
          case EV1583:
            send("msg12");
            send("msg4");
            new S60();
            try {
              new S16();
              new S74();
              new S22();
            } catch (TimeoutException e) {
              new S96();
              send("msg12");
              new S67();
            } catch (TimeoutException e) {
              log("note");
              new S10();
            }
            break;
        }
        send("msg2");
        send("msg17");
        break;
    }
    new S1();
  }
  void start() {
    new S51();
  }
  public void stop() {
    send("msg18");
    new State();
  }
  public void pause() {
    if (x2 > 0) {
      new S61();
      try {
        new State();
        if (x1 > 0) {
          send("msg0");
          log("note");
          new S37();
        } else {
          send("msg7");
          send("msg12");
          new S62();
        }
      } catch (IOException e) {
        if (x5 > 0) {
          new S71();
          log("note");
          new S79();
        }
        switch (event) {
          case EV1584:
            new S78();
            send("msg13");
            new S54();
            break;
        }
        send("msg7");
      } finally {
        send("msg19");
        send("msg2");
      }
      send("msg0");
    } else {
      send("msg12");
      new S5();
    }
    log("note");
  }
}
