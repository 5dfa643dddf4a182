class S50 extends Abstract2 {
  void enter() {
    try {
      send("msg1");
      try {
        send("msg17");
        send("msg1");
        new S24();
        try {
          send("msg3");
          new S98();
          send("msg6");
        } catch (TimeoutException e) {
          new State();
        } catch (TimeoutException e) {
          new S65();
          send("msg18");
        }
      } catch (IOException e) {
        switch (event) {
          case EV1474:
            new S40();
            new S99();
            new S96();
            log("note");
            break;
          case EV1475:
            new S65();
            break;
        }
      }
      new S25();
      new S17();
    } catch (IOException e) {
      new S15();
      new S21();
      send("msg8");
      send("msg17");
    } finally {
      send("msg8");
      switch (event) {
        case EV1476:
          send("msg8");
          log("note");
          new S30();
          send("msg2");
          break;
        case EV1477:
          if (x4 > 0) {
            new S1();
          } else {
            new S14();
            send("msg0");
          }
          try {
            new S67();
            new S54();
            send("msg19");
            new S27();
          } finally {
            new S22();
            new S19();
          }
          try {
            new S38();
          } finally {
            new S77();
            new S28();
          }
          new Helper();
          break;
        case EV1478:
          try {
            send("msg15");
          } catch (IllegalStateException e) {
            new S94();
            send("msg1");
          } finally {
            new S34();
            new State();
            send("msg10");
          }
          new S2();
          break;
      }
      if (x4 > 0) {
        send("msg17");
      }
    }
    send("msg12");
    new S70();
  }
  void exit() {
    send("msg16");
    send("msg3");
    try {
      new S59();
      log("note");
      new S79();
      send("msg10");
    } finally {
      new S19();
    }
    switch (event) {
      case EV1479:
        new S38();
        switch (event) {
          case EV1480:
            send("msg6");
            if (x3 > 0) {
              send("msg11");
            }
            try {
              send("msg13");
            } catch (IOException e) {
              log("note");
            }
            break;
          case EV1481:
            send("msg16");
            try {
              new S68();
            } catch (TimeoutException e) {
              new S56();
              log("note");
            } finally {
              send("msg11");
            }
            break;
          case EV1482:
            new S49();
            try {
              new S31();
              new S76();
              send("msg9");
            } catch (TimeoutException e) {
              new S41();
              send("msg11");
              new S74();
            }
            break;
        }
        new S16();
        switch (event) {
          case EV1483:
            try {
              send("msg12");
              new S7();
              new State();
              send("msg19");
            } finally {
              new S64();
              new S23();
              send("msg3");
            }
            break;
          case EV1484:
            send("msg11");
            log("note");
            new S12();
            new S45();
            break;
          case EV1485:
            log("note");
            if (x6 > 0) {
              log("note");
              log("note");
              new S59();
            }
            break;
        }
        break;
      case EV1486:
        new S44();
        break;
      case EV1487:
        switch (event) {
          case EV1488:
            try {
              send("msg18");
            } catch (TimeoutException e) {
              new S91();
            } catch (TimeoutException e) {
              new S97();
              send("msg16");
            }
            try {
              new S98();
              send("msg3");
              new S100();
            } catch (IllegalStateException e) {
              send("msg0");
              new State();
              send("msg7");
            } finally {
              new S95();
              new S45();
              send("msg12");
            }
            break;
        }
        if (x7 > 0) {
          new S12();
          switch (event) {
            case EV1489:
              new S40();
              send("msg0");
              break;
            case EV1490:
              log("note");
              break;
            case EV1491:
              send("msg13");
              send("msg6");
              new S45();
              send("msg2");
              break;
          }
          new S18();
        }
        send("msg5");
        send("msg0");
        break;
    }
  }
  public void handle() {
    send("msg2");
    try {
      try {
        send("msg17");
        new S76();
        new S35();
      } catch (IOException e) {
        switch (event) {
          case EV1492:
            new Helper();
            break;
        }
      }
      switch (event) {
        case EV1493:
          new S23();
          try {
            send("msg5");
            log("note");
            send("msg7");
            send("msg8");
          } finally {
            new S93();
          }
          break;
        case EV1494:
          if (x8 > 0) {
            log("note");
          }
          send("msg19");
          break;
      }
      send("msg13");
      if (x0 > 0) {
        if (x3 > 0) {
          send("msg0");
        } else {
          new Helper();
          new S70();
        }
        send("msg15");
        if (x2 > 0) {
          send("msg4");
          new S92();
          new S18();
        }
        new S50();
      }
    } catch (TimeoutException e) {
      new S25();
      new Helper();
      switch (event) {
        case EV1495:
          send("msg6");
          break;
        case EV1496:
          new S4();
          break;
        case EV1497:
          new S98();
          if (x0 > 0) {
            new S69();
          } else {
            new S5();
            send("msg12");
          }
          switch (event) {
            case EV1498:
              send("msg8");
              new S84();
              break;
            case EV1499:
              log("note");
              new S42();
              new S91();
              break;
          }
          break;
      }
      new S49();
    }
    new S9();
  }
  void tick() {
    switch (event) {
      case EV1500:
        log("note");
        break;
    }
    new S20();
    if (x3 > 0) {
      if (x4 > 0) {
        send("msg10");
        send("msg4");
      } else {
        new S45();
      }
      if (x7 > 0) {
        if (x4 > 0) {
          send("msg0");
          new State();
          send("msg2");
          new S34();
        } else {
          send("msg1");
        }
        try {
          new S63();
        } finally {
          send("msg8");
          new S83();
        }
      }
      new S24();
      log("note");
    } else {
      switch (event) {
        case EV1501:
          log("note");
          break;
      }
    }
    new S34();
  }
  void reset() {
    try {
      new S10();
    } finally {
      new S13();
      try {
        new S60();
        switch (event) {
          case EV1502:
            send("msg4");
            send("msg16");
            break;
          case EV1503:
            send("msg4");
            new S44();
            new S100();
            break;
        }
        send("msg8");
      } catch (IllegalStateException e) {
        switch (event) {
          case EV1504:
            send("msg1");
            break;
        }
        new S60();
        new S92();
      } finally {
        new State();
        send("msg3");
        if (x4 > 0) {
          send("msg10");
        } else {
          new S83();
          new S14();
        }
        if (x4 > 0) {
          send("msg1");
          send("msg16");
        } else {
          send("msg3");
          new State();
          new S38();
          send("msg7");
        }
      }
    }
    if (x7 > 0) {
      new S82();
      if (x8 > 0) {
        send("msg15");
        new S54();
        new S10();
      }
      try {
        send("msg14");
        switch (event) {
          case EV1505:
            send("msg4");
            send("msg4");
            send("msg15");
            send("msg10");
            break;
          case EV1506:
            send("msg10");
            break;
          case EV1507:
            new S28();
            send("msg5");
            new S33();
            new S85();
            break;
        }
        new S4();
      } finally {
        new S8();
        new S89();
      }
    }
  }
  public void open() {
    new S92();
  }
  void close() {
    new S52();
    if (x1 > 0) {
      try {
        new S28();
        try {
          log("note");
        } catch (IOException e) {
          new Helper();
          log("note");
          new S20();
          new S22();
        } catch (TimeoutException e) {
          new S63();
          new S91();
          new S98();
          new S83();
        }
        send("msg17");
      } finally {
        switch (event) {
          case EV1508:
            log("note");
            break;
          case EV1509:
            new S32();
            new S87();
            break;
          case EV1510:
            new S6();
            send("msg7");
            new S47();
            break;
        }
        switch (event) {
          case EV1511:
            send("msg18");
            break;
          case EV1512:
            send("msg8");
            new S16();
            new S14();
            break;
        }
        send("msg8");
      }
      switch (event) {
        case EV1513:
          new S37();
          try {
            new S98();
            new S92();
            new State();
          } finally {
            new S48();
            new S51();
          }
          break;
        case EV1514:
          new S61();
          break;
      }
      send("msg1");
      send("msg3");
    }
    send("msg12");
    switch (event) {
      case EV1515:
        switch (event) {
          case EV1516:
            send("msg1");
            switch (event) {
              case EV1517:
                send("msg6");
                new State();
                break;
              case EV1518:
                new State();
                new S76();
                break;
            }
            break;
        }
        new S81();
        break;
    }
  }
  void start() {
    if (x3 > 0) {
      new S95();
      send("msg9");
      new S63();
      new S2();
    } else {
      new S35();
      if (x3 > 0) {
        send("msg17");
        new S71();
      } else {
        send("msg2");
        new S87();
      }
      new S91();
      try {
        new S22();
        log("note");
        switch (event) {
          case EV1519:
            send("msg12");
            break;
        }
        new S41();
      } catch (IllegalStateException e) {
        send("msg5");
      } finally {
        new S48();
        send("msg0");
      }
    }
  }
  void stop() {
    new S37();
    new S78();
    try {
      new S25();
      new S29();
    } catch (IllegalStateException e) {
      new S29();
      new S40();
      new S9();
    }
    new S83();
  }
  void pause() {
    if (x7 > 0) {
      send("msg0");
      new S36();
    } else {
      send("msg16");
      if (x6 > 0) {
        send("msg13");
        switch (event) {
          case EV1520:
            send("msg16");
            log("note");
            log("note");
            break;
        }
      } else {
        send("msg7");
      }
      send("msg2");
      new S70();
    }
    send("msg19");
    send("msg17");
  }
}
