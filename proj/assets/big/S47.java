class S47 extends Abstract4 {
  void enter() {
    new S74();
    try {
      if (x0 > 0) {
        new State();
      }
    } finally {
      new S5();
      new S53();
      switch (event) {
        case EV1357:
          if (x4 > 0) {
            new S3();
            new S70();
          } else {
            new S58();
          }
          new S4();
          break;
        case EV1358:
          if (x5 > 0) {
            send("msg10");
            send("msg17");
            send("msg11");
            new S82();
          } else {
            new S67();
            new S40();
            new S57();
            send("msg4");
          }
          try {
            new State();
            send("msg14");
            new State();
          } finally {
            send("msg3");
            new State();
            send("msg13");
          }
          send("msg12");
          try {
            new S99();
            send("msg9");
            new S85();
          } catch (TimeoutException e) {
            new Helper();
          } catch (TimeoutException e) {
            send("msg1");
            send("msg5");
            new S57();
            log("note");
          }
          break;
        case EV1359:
          new S57();
          send("msg1");
          break;
      }
      send("msg17");
    }
  }
  public void exit() {
    try {
      if (x2 > 0) {
        new S69();
        send("msg5");
        switch (event) {
          case EV1360:
            send("msg3");
            log("note");
            new S27();
            break;
          case EV1361:
            log("note");
            send("msg15");
            send("msg18");
            break;
          case EV1362:
            log("note");
            new S81();
            break;
        }
        send("msg12");
      } else {
        send("msg5");
        if (x1 > 0) {
          send("msg9");
          new S42();
          send("msg4");
        } else {
          new S20();
        }
        try {
          new S87();
          send("msg4");
        } catch (IllegalStateException e) {
          log("note");
          new S48();
          log("note");
          new S16();
        }
        send("msg10");
      }
    } finally {
      try {
        new S31();
        try {
          log("note");
          new S32();
          new S4();
          send("msg18");
        } finally {
          send("msg2");
          new S82();
          send("msg9");
          new S27();
        }
      } finally {
        try {
          send("msg0");
          log("note");
        } catch (TimeoutException e) {
          send("msg5");
          new Helper();
        }
        send("msg14");
        new S39();
      }
    }
  }
  public void handle() {
    send("msg1");
  }
  void tick() {
    send("msg7");
  }
  public void reset() {
    send("msg11");
    new Helper();
  }
  public void open() {
    new S6();
    send("msg11");
    new S12();
  }
  void close() {
    new S59();
    try {
      new S8();
      log("note");
    } catch (TimeoutException e) {
      try {
        send("msg2");
        new S12();
      } catch (IllegalStateException e) {
        new State();
        send("msg10");
      } catch (TimeoutException e) {
        switch (event) {
          case EV1363:
            new State();
            send("msg13");
            new S29();
            break;
          case EV1364:
            new S47();
            new S10();
            log("note");
            break;
          case EV1365:
            new S40();
            new S31();
            new S74();
            break;
        }
        new S65();
      }
      send("msg17");
      new State();
    } catch (IOException e) {
      new S6();
      new S26();
    }
  }
  void start() {
    new S34();
    new S1();
    if (x4 > 0) {
      new S13();
      if (x7 > 0) {
        new S72();
        new S70();
      }
    } else {
      new S66();
      if (x5 > 0) {
        send("msg12");
        send("msg4");
      }
      switch (event) {
        case EV1366:
          new S56();
          break;
        case EV1367:
          try {
            new S24();
            new S65();
            send("msg10");
          } catch (IllegalStateException e) {
            send("msg14");
          }
          new S22();
          new S27();
          break;
      }
      if (x8 > 0) {
        new S17();
        new S55();
        switch (event) {
          case EV1368:
            new S68();
            new S55();
            new S24();
            send("msg4");
            break;
          case EV1369:
            log("note");
            break;
          case EV1370:
            new S21();
            break;
        }
        new S56();
      } else {
        switch (event) {
          case EV1371:
            new S21();
            send("msg0");
            break;
          case EV1372:
            new S89();
            send("msg19");
            new Helper();
            break;
        }
        new S77();
      }
    }
    log("note");
  }
  void stop() {
    try {
      try {
        new S25();
        new S46();
      } catch (TimeoutException e) {
        if (x6 > 0) {
          log("note");
        }
        new S1();
        new S84();
        switch (event) {
          case EV1373:
            new S55();
            new State();
            new S46();
            break;
          case EV1374:
            new S97();
            send("msg10");
            break;
        }
      }
      new S45();
      try {
        if (x3 > 0) {
          new S41();
          new S5();
          send("msg2");
        } else {
          send("msg16");
        }
      } catch (TimeoutException e) {
        new S57();
      }
    } catch (IOException e) {
      try {
        send("msg2");
        switch (event) {
          case EV1375:
            new S40();
            new S12();
            break;
          case EV1376:
            new State();
            send("msg18");
            break;
        }
        new Helper();
      } finally {
        new S41();
      }
      send("msg16");
    } finally {
      send("msg0");
      if (x3 > 0) {
        try {
          new S54();
          new Helper();
        } catch (IllegalStateException e) {
          new Helper();
          log("note");
        } finally {
          new S91();
          new Helper();
          log("note");
          new S2();
        }
        new S6();
        send("msg2");
      }
      log("note");
      send("msg13");
    }
  }
  public void pause() {
    switch (event) {
      case EV1377:
        new S49();
        if (x5 > 0) {
          switch (event) {
            case EV1378:
              new S16();
              send("msg4");
              new S89();
              break;
            case EV1379:
              new S70();
              new S14();
              send("msg3");
              break;
            case EV1380:
              send("msg7");
              new S21();
              new S30();
              break;
          }
          try {
            new Helper();
            new S59();
            new S46();
          } catch (IOException e) {
            new S94();
            send("msg10");
          }
          new S93();
          log("note");
        } else {
          new S61();
        }
        break;
    }
    new S55();
    send("msg7");
  }
}
