class S16 extends Abstract12 {
  void enter() {
    try {
      new S66();
      switch (event) {
        case EV516:
          send("msg1");
          if (x2 > 0) {
            new S5();
            send("msg17");
            new S38();
          } else {
            new S47();
          }
          new S83();
          new S97();
          break;
        case EV517:
          log("note");
          new S30();
          break;
        case EV518:
          new S80();
          try {
            new S87();
            send("msg3");
            log("note");
          } catch (IllegalStateException e) {
            send("msg1");
            new S9();
            new S33();
            send("msg14");
          } catch (TimeoutException e) {
            new S62();
          }
          break;
      }
    } catch (IOException e) {
      try {
        new S11();
        if (x9 > 0) {
          log("note");
          new S33();
        }
        send("msg9");
      } catch (IOException e) {
        new S65();
        new S43();
        new S55();
        try {
          new S12();
        } catch (IllegalStateException e) {
          new S62();
          log("note");
          new S59();
          new S79();
        } finally {
          new S97();
          new S37();
        }
      }
      new S69();
      switch (event) {
        case EV519:
          if (x1 > 0) {
            log("note");
            log("note");
          } else {
            new S24();
            new S56();
          }
          break;
      }
      switch (event) {
        case EV520:
          new S42();
          try {
            send("msg11");
            send("msg4");
            new S99();
          } catch (IllegalStateException e) {
            new S68();
          } finally {
            log("note");
            new S59();
            new S86();
          }
          new S98();
          break;
        case EV521:
          send("msg6");
          new S42();
          send("msg9");
          break;
      }
    }
  }
  public void exit() {
    if (x8 > 0) {
      send("msg13");
      try {
        switch (event) {
          case EV522:
            new S21();
            send("msg7");
            new Helper();
            break;
          case EV523:
            new S67();
            break;
        }
        try {
          new S29();
          new S29();
          new Helper();
          new State();
        } catch (IOException e) {
          send("msg8");
          new State();
          new State();
        } finally {
          new S67();
          send("msg19");
          log("note");
          new S31();
        }
        log("note");
        new S70();
      } catch (IllegalStateException e) {
        new S50();
        if (x1 > 0) {
          new S77();
          send("msg5");
          new S63();
        }
        new S24();
        send("msg18");
      } catch (IOException e) {
        send("msg9");
      }
      new S27();
    }
    new S55();
    if (x3 > 0) {
      new State();
      send("msg18");
      try {
        if (x4 > 0) {
          log("note");
        }
      } catch (IOException e) {
        switch (event) {
          case EV524:
            new S7();
            new S1();
            break;
          case EV525:
            new S61();
            send("msg14");
            new S92();
            send("msg5");
            break;
        }
        switch (event) {
          case EV526:
            send("msg12");
            new S32();
            new S38();
            break;
          case EV527:
            send("msg0");
            new S69();
            break;
          case EV528:
            new S67();
            send("msg1");
            break;
        }
        new S42();
        new S31();
      } finally {
        new S92();
        new S3();
        new S2();
      }
      log("note");
    } else {
      send("msg11");
      send("msg4");
      switch (event) {
        case EV529:
          log("note");
          break;
      }
    }
    switch (event) {
      case EV530:
        log("note");
        if (x8 > 0) {
          send("msg5");
          new S34();
          new S24();
        }
        break;
      case EV531:
        send("msg11");
        break;
    }
  }
  public void handle() {
    if (x6 > 0) {
      switch (event) {
        case EV532:
          send("msg2");
          try {
            new S99();
            send("msg2");
            send("msg3");
            send("msg4");
          } finally {
            new S87();
            log("note");
          }
          send("msg7");
          send("msg11");
          break;
        case EV533:
          send("msg12");
          break;
        case EV534:
          send("msg16");
          send("msg6");
          break;
      }
      send("msg7");
      new S62();
      send("msg1");
    }
    send("msg16");
    new S72();
    send("msg13");
  }
  void tick() {
    new S77();
    new S56();
  }
  void reset() {
    new State();
  }
  public void open() {
    send("msg4");
    new S66();
    switch (event) {
      case EV535:
        try {
          new S99();
          if (x1 > 0) {
            log("note");
            new S76();
            send("msg18");
          } else {
            new S21();
            send("msg4");
            log("note");
          }
          send("msg17");
        } catch (IllegalStateException e) {
          send("msg13");
          try {
            new Helper();
            new S18();
            send("msg17");
            new S90();
          } catch (TimeoutException e) {
            new S48();
          }
        } finally {
          if (x4 > 0) {
            new S76();
            new S78();
            new S15();
          }
        }
        send("msg15");
        log("note");
        new S50();
        break;
    }
    send("msg3");
  }
  void close() {
    new S6();
    send("msg3");
  }
  public void start() {
    new S67();
  }
  void stop() {
    try {
      new S83();
    } catch (IOException e) {
      new S15();
      new S99();
      send("msg6");
      try {
        log("note");
        new S1();
        switch (event) {
          case EV536:
            new S89();
            new S27();
            new S55();
            new S70();
            break;
        }
        new Helper();
      } catch (TimeoutException e) {
        new S17();
      }
    }
    send("msg12");
  }
  void pause() {
    send("msg2");
  }
}
