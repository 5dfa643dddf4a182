class S49 extends State {
  void enter() {
    log("note");
    log("note");
    switch (event) {
      case EV1413:
        new S19();
        break;
      case EV1414:
        send("msg19");
        send("msg12");
        break;
      case EV1415:
        if (x7 > 0) {
          new S39();
          new S2();
          new S10();
          switch (event) {
            case EV1416:
              new S33();
              send("msg12");
              new S35();
              send("msg3");
              break;
            case EV1417:
              send("msg3");
              new S21();
              break;
            case EV1418:
              send("msg14");
              new Helper();
              new S66();
              break;
          }
        }
        send("msg16");
        new S9();
        log("note");
        break;
    }
    send("msg8");
  }
  void exit() {
    send("msg6");
    if (x6 > 0) {
      send("msg12");
      log("note");
      switch (event) {
        case EV1419:
          new S14();
          send("msg16");
          break;
        case EV1420:
          switch (event) {
            case EV1421:
              send("msg10");
              break;
            case EV1422:
              new S26();
              new S17();
              break;
          }
          if (x5 > 0) {
            send("msg4");
            new S3();
            log("note");
          } else {
            new S31();
            new S46();
          }
          new S94();
          new S6();
          break;
      }
      send("msg19");
    } else {
      if (x6 > 0) {
        switch (event) {
          case EV1423:
            new S30();
            break;
          case EV1424:
            log("note");
            send("msg16");
            break;
          case EV1425:
            send("msg14");
            new S73();
            new S94();
            break;
        }
        switch (event) {
          case EV1426:
            send("msg6");
            new S3();
            break;
          case EV1427:
            log("note");
            break;
          case EV1428:
            send("msg14");
            send("msg7");
            break;
        }
      } else {
        new S70();
        if (x0 > 0) {
          new S19();
          log("note");
        }
        new S80();
      }
      new S49();
    }
  }
  void handle() {
    switch (event) {
      case EV1429:
        new S75();
        try {
          send("msg2");
          switch (event) {
            case EV1430:
              new S27();
              send("msg1");
              break;
          }
        } catch (IllegalStateException e) {
          log("note");
          new S87();
        } catch (IOException e) {
          try {
            new S74();
            send("msg0");
            new S63();
            log("note");
          } catch (IOException e) {
            new Helper();
            new S3();
            new S88();
            log("note");
          } finally {
            new S23();
          }
          send("msg4");
          if (x7 > 0) {
            new S11();
            log("note");
          }
          log("note");
        }
        if (x6 > 0) {
          if (x6 > 0) {
            new S93();
            new S57();
          } else {
            new S98();
            log("note");
            send("msg1");
          }
          send("msg7");
        }
        break;
    }
    try {
      new S71();
      send("msg8");
      send("msg0");
      new S17();
    } finally {
      switch (event) {
        case EV1431:
          try {
            send("msg17");
          } catch (IllegalStateException e) {
            log("note");
            send("msg12");
          }
          if (x8 > 0) {
            new S96();
            new S91();
          }
          break;
        case EV1432:
          new S67();
          switch (event) {
            case EV1433:
              new S55();
              send("msg2");
              break;
          }
          break;
      }
      send("msg16");
      send("msg10");
      send("msg4");
    }
    new S75();
    new S4();
  }
  void tick() {
    send("msg11");
    new S44();
    switch (event) {
      case EV1434:
        switch (event) {
          case EV1435:
            new S45();
            send("msg15");
            if (x0 > 0) {
              send("msg17");
              send("msg3");
            } else {
              send("msg19");
              send("msg16");
              send("msg9");
              new S33();
            }
            send("msg12");
            break;
        }
        new S96();
        break;
      case EV1436:
        log("note");
        log("note");
        switch (event) {
          case EV1437:
            new S68();
            break;
        }
        break;
    }
  }
  void reset() {
    new S13();
  }
  void open() {
    if (x2 > 0) {
      switch (event) {
        case EV1438:
          log("note");
          log("note");
          new S56();
          switch (event) {
            case EV1439:
              send("msg2");
              break;
            case EV1440:
              new S22();
              send("msg7");
              break;
            case EV1441:
              new Helper();
              send("msg1");
              new Helper();
              send("msg12");
              break;
          }
          break;
        case EV1442:
          new S84();
          try {
            new S83();
            new S44();
            send("msg18");
          } catch (TimeoutException e) {
            send("msg9");
            send("msg1");
            send("msg2");
            send("msg3");
          } catch (IOException e) {
            new S82();
            send("msg8");
          }
          try {
            new S97();
          } catch (IllegalStateException e) {
            send("msg0");
            new S29();
            new S41();
          } catch (IllegalStateException e) {
            new S27();
            new S54();
          }
          new S85();
          break;
        case EV1443:
          new S100();
          if (x9 > 0) {
            new S89();
            new S16();
          } else {
            new S48();
          }
          if (x7 > 0) {
            new S24();
            new S50();
            new S66();
            new Helper();
          } else {
            new State();
            new S63();
          }
          new State();
          break;
      }
      new Helper();
    } else {
      new S17();
      send("msg19");
      new S86();
      switch (event) {
        case EV1444:
          new S6();
          send("msg18");
          break;
      }
    }
  }
  void close() {
    if (x1 > 0) {
      new S49();
      new S91();
      send("msg4");
      new S8();
    } else {
      if (x6 > 0) {
        switch (event) {
          case EV1445:
            log("note");
            new S61();
            send("msg14");
            new S86();
            break;
          case EV1446:
            new S37();
            log("note");
            break;
        }
      } else {
        new S85();
        send("msg6");
        send("msg19");
      }
      new S98();
      try {
        log("note");
        send("msg2");
        send("msg14");
        if (x4 > 0) {
          new S38();
          log("note");
          new S89();
        }
      } catch (IllegalStateException e) {
        try {
          send("msg13");
          new S3();
          new S56();
        } catch (TimeoutException e) {
          send("msg7");
        }
        try {
          send("msg17");
          send("msg17");
          send("msg12");
          new S60();
        } finally {
          send("msg6");
          new S33();
          send("msg17");
        }
        send("msg11");
      }
      new S88();
    }
    if (x3 > 0) {
      new S15();
      new S52();
    }
    try {
      try {
        switch (event) {
          case EV1447:
            new S63();
            send("msg10");
            break;
          case EV1448:
            new S21();
            break;
          case EV1449:
            new State();
            send("msg13");
            send("msg9");
            break;
        }
        new S33();
        switch (event) {
          case EV1450:
            new S74();
            break;
          case EV1451:
            send("msg0");
            new S70();
            break;
          case EV1452:
            send("msg7");
            send("msg4");
            break;
        }
      } finally {
        try {
          new S76();
          new S14();
          new State();
        } catch (IllegalStateException e) {
          new S2();
          new S12();
        }
        try {
          log("note");
          send("msg14");
        } finally {
          new Helper();
        }
        send("msg1");
        try {
          send("msg1");
          send("msg4");
          new S38();
        } catch (IOException e) {
          send("msg8");
          new S40();
          new S85();
        } catch (IOException e) {
          new S62();
          send("msg16");
          new S92();
          new S82();
        }
      }
      switch (event) {
        case EV1453:
          new S1();
          break;
        case EV1454:
          new S38();
          new S49();
          send("msg4");
          new State();
          break;
        case EV1455:
          if (x9 > 0) {
            new S78();
          }
          break;
      }
    } catch (IOException e) {
      new S82();
      new S62();
      new S1();
      if (x5 > 0) {
        send("msg3");
        log("note");
        if (x2 > 0) {
          new S68();
          new S50();
        }
        if (x4 > 0) {
          new S17();
          new S10();
          send("msg5");
        } else {
          new S81();
          new S21();
        }
      }
    } finally {
      try {
        new S36();
      } catch (TimeoutException e) {
        new S61();
        send("msg0");
        new S53();
      }
      send("msg16");
    }
    new S47();
  }
  public void start() {
    new S1();
    try {
      try {
        try {
          new S91();
          send("msg0");
          new S12();
          send("msg10");
        } catch (IllegalStateException e) {
          log("note");
          new S51();
        }
        send("msg12");
        log("note");
      } catch (TimeoutException e) {
        new S13();
        new S20();
        log("note");
        log("note");
      }
    } catch (IOException e) {
      switch (event) {
        case EV1456:
          new S13();
          new S90();
          new S13();
          break;
      }
      switch (event) {
        case EV1457:
          send("msg16");
          send("msg5");
          send("msg11");
          new S48();
          break;
        case EV1458:
          new S67();
          break;
        case EV1459:
          log("note");
          try {
            send("msg0");
            new Helper();
            send("msg7");
          } finally {
            new S3();
          }
          try {
            new S67();
          } catch (IOException e) {
            send("msg12");
          } catch (IOException e) {
            new S2();
          }
          switch (event) {
            case EV1460:
              send("msg7");
              send("msg3");
              new S78();
              break;
            case EV1461:
              new S66();
              send("msg13");
              break;
          }
          break;
      }
      new S33();
      send("msg16");
    } catch (IOException e) {
      if (x1 > 0) {
        try {
          new S61();
        } catch (IllegalStateException e) {
          new S68();
          new S65();
        } catch (IOException e) {
          new S61();
          log("note");
          new S65();
        }
      }
    }
    new S5();
    send("msg5");
  }
  void stop() {
    switch (event) {
      case EV1462:
        try {
          send("msg18");
          if (x9 > 0) {
            new S80();
            new S91();
            send("msg15");
          }
        } catch (IllegalStateException e) {
          new S99();
          try {
            new S62();
          } catch (IOException e) {
            new S79();
          } finally {
            log("note");
            new S89();
          }
          switch (event) {
            case EV1463:
              new S49();
              log("note");
              break;
          }
        }
        break;
    }
    switch (event) {
      case EV1464:
        try {
          switch (event) {
            case EV1465:
              send("msg18");
              send("msg11");
              break;
            case EV1466:
              send("msg15");
              break;
          }
          log("note");
          new S5();
        } catch (TimeoutException e) {
          if (x7 > 0) {
            send("msg10");
            send("msg11");
            new S74();
          }
          new S20();
        } finally {
          switch (event) {
            case EV1467:
              new S58();
              send("msg9");
              break;
            case EV1468:
              send("msg2");
              break;
            case EV1469:
              new S64();
              new S96();
              new S8();
              send("msg9");
              break;
          }
          send("msg8");
          try {
            new S5();
            new S56();
            log("note");
            log("note");
          } catch (IOException e) {
            new S83();
            send("msg11");
            new S33();
            new S15();
          } catch (TimeoutException e) {
            new S51();
            send("msg2");
            new S9();
            send("msg18");
          }
        }
        break;
      case EV1470:
        send("msg14");
        new S65();
        switch (event) {
          case EV1471:
            log("note");
            break;
          case EV1472:
            new S37();
            break;
          case EV1473:
            new S35();
            send("msg4");
            new S9();
            if (x7 > 0) {
              send("msg8");
            }
            break;
        }
        new S94();
        break;
    }
  }
  void pause() {
    send("msg17");
    send("msg14");
  }
}
