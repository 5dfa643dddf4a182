class S51 extends Abstract8 {
  public void enter() {
    new S46();
    send("msg15");
    log("note");
    switch (event) {
      case EV1521:
        send("msg7");
        send("msg1");
        break;
    }
  }
  void exit() {
    new S17();
    new State();
    log("note");
  }
  void handle() {
    new Helper();
  }
  public void tick() {
    try {
      log("note");
      new S78();
      new S6();
    } catch (IllegalStateException e) {
      send("msg13");
      send("msg2");
      new S29();
      try {
        try {
          new S23();
        } catch (IOException e) {
          send("msg7");
          send("msg10");
          new S21();
          send("msg10");
        } catch (TimeoutException e) {
          new S70();
          new S61();
          new S99();
        }
      } finally {
        new S18();
        send("msg7");
        send("msg8");
        send("msg13");
      }
    } finally {
      send("msg18");
      switch (event) {
        case EV1522:
          if (x6 > 0) {
            send("msg10");
          }
          new Helper();
          break;
        case EV1523:
          send("msg0");
          if (x2 > 0) {
            new S5();
          } else {
            new S5();
            send("msg17");
          }
          switch (event) {
            case EV1524:
              log("note");
              send("msg8");
              new S32();
              new S11();
              break;
            case EV1525:
              new S81();
              new S93();
              break;
          }
          break;
      }
      if (x4 > 0) {
        new S72();
        if (x3 > 0) {
          new S20();
        }
        switch (event) {
          case EV1526:
            send("msg3");
            send("msg12");
            new S21();
            new S66();
            break;
        }
        send("msg16");
      }
      log("note");
    }
    log("note");
    switch (event) {
      case EV1527:
        new S97();
        break;
      case EV1528:
        new S45();
        break;
    }
  }
  public void reset() {
    if (x0 > 0) {
      send("msg14");
      new S38();
      switch (event) {
        case EV1529:
          send("msg11");
          switch (event) {
            case EV1530:
              new S93();
              send("msg11");
              new S19();
              new S54();
              break;
          }
          break;
        case EV1531:
          if (x7 > 0) {
            new S10();
            new S53();
            new S82();
          }
          new S40();
          send("msg17");
          new S38();
          break;
        case EV1532:
          new S41();
          send("msg14");
          break;
      }
    } else {
      try {
        send("msg15");
        new S76();
        try {
          new S38();
          send("msg1");
          send("msg15");
          new S84();
        } catch (IOException e) {
          log("note");
          new S49();
        }
        try {
          send("msg9");
        } catch (IOException e) {
          new S31();
          new S76();
        }
      } catch (IllegalStateException e) {
        switch (event) {
          case EV1533:
            send("msg6");
            break;
          case EV1534:
            log("note");
            break;
        }
      } finally {
        if (x2 > 0) {
          send("msg1");
          send("msg3");
          new S66();
          new S21();
        }
        switch (event) {
          case EV1535:
            new S52();
            log("note");
            send("msg11");
            new S87();
            break;
          case EV1536:
            send("msg15");
            log("note");
            break;
        }
      }
      new S30();
      new S99();
      send("msg4");
    }
    switch (event) {
      case EV1537:
        new S76();
        try {
          send("msg6");
          new S71();
          send("msg10");
        } catch (IOException e) {
          new S43();
          new S84();
        }
        break;
      case EV1538:
        if (x7 > 0) {
          if (x2 > 0) {
            new S38();
            log("note");
          }
          new S8();
        }
        new S8();
        send("msg5");
        new S13();
        break;
    }
    new S97();
    try {
      new S28();
      new Helper();
    } catch (IllegalStateException e) {
      if (x5 > 0) {
        log("note");
        new S12();
      }
      new Helper();
      switch (event) {
        case EV1539:
          try {
            new S29();
            send("msg15");
          } catch (IllegalStateException e) {
            new S57();
            send("msg12");
            new S24();
            send("msg1");
          } finally {
            send("msg15");
          }
          break;
      }
      new S45();
    } catch (IllegalStateException e) {
      new S37();
    }
  }
  void open() {
    new S91();
    new S64();
    new S12();
  }
  void close() {
    log("note");
    send("msg11");
    send("msg9");
  }
  public void start() {
    try {
      new S97();
      try {
        log("note");
        new S71();
      } catch (IllegalStateException e) {
        new S32();
        try {
          send("msg4");
          new S40();
          new S100();
        } catch (TimeoutException e) {
          new S33();
          new S80();
        } catch (IOException e) {
          new S42();
          new S53();
          new S93();
          new S74();
        }
        send("msg14");
      } finally {
        new S90();
      }
      switch (event) {
        case EV1540:
          send("msg1");
          switch (event) {
            case EV1541:
              send("msg17");
              new S37();
              send("msg10");
              break;
            case EV1542:
              new S75();
              send("msg13");
              break;
          }
          if (x4 > 0) {
            new S88();
          }
          new Helper();
          break;
      }
      send("msg13");
    } catch (TimeoutException e) {
      send("msg10");
      new S9();
      new S61();
    } catch (IllegalStateException e) {
      new Helper();
      if (x4 > 0) {
        send("msg17");
      } else {
        new S4();
        new S62();
        try {
          send("msg0");
          new S52();
          new S51();
          new S19();
        } finally {
          new S46();
          log("note");
          new S89();
        }
        log("note");
      }
      send("msg16");
      new S2();
    }
    log("note");
    send("msg8");
    if (x1 > 0) {
      new Helper();
      send("msg14");
      new S89();
      send("msg6");
    }
  }
  void stop() {
    try {
      send("msg9");
    } catch (IOException e) {
      switch (event) {
        case EV1543:
          if (x0 > 0) {
            send("msg19");
            new S13();
            new S49();
            new S16();
          }
          try {
            new Helper();
          } catch (IOException e) {
            new S94();
            log("note");
          }
          break;
      }
      new S58();
      new S7();
    } catch (IllegalStateException e) {
      new S47();
      log("note");
      send("msg17");
    }
    send("msg17");
    log("note");
    send("msg11");
  }
  void pause() {
    new S72();
    if (x3 > 0) {
      new S57();
      new S100();
      try {
        if (x9 > 0) {
          new S60();
          new S6();
          send("msg6");
        } else {
          new S60();
          new S68();
        }
        send("msg1");
        switch (event) {
          case EV1544:
            new S31();
            new S57();
            new State();
            break;
          case EV1545:
            log("note");
            new S12();
            break;
          case EV1546:
            send("msg11");
            break;
        }
      } finally {
        send("msg17");
        if (x1 > 0) {
          new S21();
          send("msg15");
        } else {
          new S99();
        }
        new S34();
      }
    }
  }
}
