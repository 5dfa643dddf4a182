class S53 extends Abstract12 {
  void enter() {
    send("msg1");
  }
  void exit() {
    send("msg6");
  }
  public void handle() {
    send("msg18");
  }
  void tick() {
    send("msg14");
    if (x1 > 0) {
      new S32();
      new S88();
      new S59();
    } else {
      new S60();
    }
    send("msg15");
    new Helper();
  }
  void reset() {
    new S3();
    new S74();
    new S84();
    switch (event) {
      case EV1585:
        if (x2 > 0) {
          new S22();
          try {
            new S26();
            send("msg2");
            send("msg9");
            send("msg7");
          } catch (IOException e) {
            send("msg9");
            new S34();
            new S58();
            new S70();
          } catch (TimeoutException e) {
            new S46();
            send("msg16");
            send("msg9");
            new S68();
          }
          new S58();
        } else {
          if (x5 > 0) {
            new State();
            new S42();
          } else {
            log("note");
            send("msg5");
            log("note");
          }
          new S91();
          new S17();
          send("msg15");
        }
        try {
          if (x9 > 0) {
            new S23();
            new S71();
            send("msg15");
            new S82();
          } else {
            send("msg4");
            new S15();
            send("msg2");
            send("msg10");
          }
          if (x7 > 0) {
            log("note");
            log("note");
            new S16();
            send("msg4");
          }
        } catch (IOException e) {
          send("msg3");
          send("msg6");
          new Helper();
        }
        break;
    }
  }
  void open() {
    new S51();
    send("msg16");
    log("note");
    new S69();
  }
  public void close() {
    send("msg2");
    if (x2 > 0) {
      new S11();
      switch (event) {
        case EV1586:
          send("msg12");
          send("msg15");
          try {
            new S65();
            send("msg2");
          } catch (IOException e) {
            new S28();
            new S8();
          } finally {
            new S66();
            send("msg7");
            new S83();
          }
          send("msg12");
          break;
        case EV1587:
          send("msg4");
          send("msg10");
          break;
        case EV1588:
          send("msg2");
          try {
            new Helper();
          } catch (TimeoutException e) {
            new S84();
            log("note");
          } finally {
            send("msg9");
          }
          new S57();
          break;
      }
    } else {
      if (x2 > 0) {
        new S32();
        send("msg9");
        send("msg5");
      }
    }
    new S55();
    send("msg8");
  }
  void start() {
    send("msg7");
    if (x0 > 0) {
      try {
        if (x0 > 0) {
          new S38();
        }
        if (x8 > 0) {
          new S59();
          log("note");
        }
        try {
          new S29();
          new S65();
        } catch (IOException e) {
          new S26();
          send("msg15");
        } catch (IllegalStateException e) {
          send("msg11");
          log("note");
        }
        if (x7 > 0) {
          send("msg5");
          new S93();
          new S41();
          new S42();
        } else {
          send("msg12");
          new S22();
        }
      } catch (TimeoutException e) {
        new S42();
        new S87();
        if (x2 > 0) {
          new S90();
          new S47();
          new S98();
          log("note");
        } else {
          send("msg13");
          send("msg2");
          new S25();
          new State();
        }
        new S19();
      } finally {
        send("msg17");
        new State();
      }
    } else {
      send("msg16");
    }
    new S3();
    switch (event) {
      case EV1589:
        send("msg10");
        new S84();
        break;
    }
  }
  public void stop() {
    new S12();
    try {
      try {
        if (x6 > 0) {
          log("note");
        }
      } catch (TimeoutException e) {
        if (x5 > 0) {
          new S18();
        } else {
          new S7();
          new S43();
          send("msg4");
        }
      } finally {
        if (x0 > 0) {
          new S22();
          log("note");
          new S12();
          send("msg10");
        }
        new S50();
      }
      try {
        log("note");
      } catch (IOException e) {
        try {
          new Helper();
          send("msg1");
          new S58();
          send("msg18");
        } catch (TimeoutException e) {
          new S77();
          log("note");
          new S28();
          new S22();
        }
        try {
          new S36();
        } catch (IOException e) {
          send("msg17");
          send("msg11");
          send("msg0");
        } catch (TimeoutException e) {
          new S80();
          send("msg16");
        }
      }
      new S21();
    } catch (TimeoutException e) {
      log("note");
      new S79();
      new S99();
    } finally {
      try {
        send("msg16");
      } catch (IllegalStateException e) {
        if (x4 > 0) {
          send("msg15");
        }
        send("msg5");
        switch (event) {
          case EV1590:
            new S94();
            new S22();
            new S14();
            break;
          case EV1591:
            new Helper();
            send("msg3");
            break;
          case EV1592:
            send("msg11");
            new S1();
            new S19();
            break;
        }
        new S86();
      } finally {
        switch (event) {
          case EV1593:
            new S34();
            new S56();
            break;
          case EV1594:
            send("msg19");
            send("msg4");
            break;
          case EV1595:
            new S41();
            log("note");
            break;
        }
        switch (event) {
          case EV1596:
            new S96();
            send("msg18");
            new S61();
            break;
        }
        new S93();
      }
      if (x5 > 0) {
        new S96();
        new S93();
      } else {
        if (x0 > 0) {
          send("msg3");
        } else {
          new S49();
          new S94();
          new S22();
          send("msg6");
        }
        send("msg6");
        switch (event) {
          case EV1597:
            new S6();
            send("msg18");
            new S39();
            break;
          case EV1598:
            new S10();
            log("note");
            break;
          case EV1599:
            new S93();
            break;
        }
        switch (event) {
          case EV1600:
            send("msg6");
            break;
        }
      }
    }
  }
  void pause() {
    log("note");
    new S33();
  }
}
