class S48 extends Abstract4 {
  public void enter() {
    send("msg17");
  }
  void exit() {
    try {
      if (x3 > 0) {
        send("msg7");
        send("msg7");
      }
      new S45();
    } finally {
      switch (event) {
        case EV1381:
          log("note");
          break;
        case EV1382:
          new S35();
          send("msg2");
          break;
        case EV1383:
          send("msg19");
          new S81();
          switch (event) {
            case EV1384:
              new S33();
              log("note");
              new S36();
              break;
          }
          new S47();
          break;
      }
      try {
        send("msg3");
        new S42();
        log("note");
      } finally {
        switch (event) {
          case EV1385:
            new S64();
            new S66();
            send("msg0");
            break;
          case EV1386:
            new S80();
            new S25();
            break;
        }
        switch (event) {
          case EV1387:
            new S59();
            send("msg4");
            new S89();
            break;
          case EV1388:
            new S54();
            log("note");
            send("msg7");
            break;
          case EV1389:
            new S24();
            send("msg8");
            new S26();
            break;
        }
        new S5();
      }
      new S78();
    }
    try {
      new S80();
      switch (event) {
        case EV1390:
          new S80();
          switch (event) {
            case EV1391:
              new S81();
              send("msg12");
              break;
            case EV1392:
              new S88();
              send("msg6");
              break;
            case EV1393:
              new S42();
              break;
          }
          try {
            send("msg16");
            send("msg17");
          } catch (TimeoutException e) {
            send("msg7");
          } finally {
            new S78();
          }
          log("note");
          break;
        case EV1394:
          new S14();
          try {
            send("msg9");
            send("msg18");
            send("msg3");
          } catch (TimeoutException e) {
            log("note");
          } catch (IllegalStateException e) {
            send("msg13");
            new S61();
            log("note");
          }
          new S49();
          if (x0 > 0) {
            log("note");
            log("note");
          }
          break;
        case EV1395:
          switch (event) {
            case EV1396:
              log("note");
              new S13();
              new S67();
              send("msg5");
              break;
          }
          break;
      }
    } catch (IllegalStateException e) {
      new S35();
      new S67();
      new State();
    } finally {
      if (x5 > 0) {
        send("msg2");
        send("msg0");
        new S16();
      }
      send("msg5");
      try {
        if (x2 > 0) {
          new S19();
        }
        send("msg11");
        try {
          new S14();
          send("msg18");
          new State();
        } catch (IOException e) {
          send("msg5");
        } catch (IOException e) {
          new S57();
          new S94();
          log("note");
        }
        switch (event) {
          case EV1397:
            send("msg7");
            log("note");
            break;
        }
      } catch (IllegalStateException e) {
        if (x6 > 0) {
          send("msg18");
        }
        try {
          new S48();
          new S14();
          send("msg3");
          new S37();
        } catch (IllegalStateException e) {
          new S72();
        } finally {
          log("note");
          new S40();
        }
      } catch (TimeoutException e) {
        new S17();
        switch (event) {
          case EV1398:
            log("note");
            new S69();
            new State();
            break;
          case EV1399:
            new S45();
            send("msg5");
            break;
          case EV1400:
            send("msg10");
            break;
        }
      }
      if (x4 > 0) {
        new S67();
      } else {
        new S63();
      }
    }
    send("msg1");
  }
  void handle() {
    send("msg1");
    send("msg16");
    new S72();
  }
  void tick() {
    send("msg7");
    switch (event) {
      case EV1401:
        if (x7 > 0) {
          send("msg5");
          new S58();
          send("msg16");
          log("note");
        }
        new S20();
        new S99();
        new S71();
        break;
    }
    send("msg11");
  }
  void reset() {
    try {
      new S12();
      log("note");
    } catch (TimeoutException e) {
      try {
        new S92();
      } catch (IOException e) {
        switch (event) {
          case EV1402:
            new S14();
            new State();
            log("note");
            break;
          case EV1403:
            new S94();
            break;
          case EV1404:
            new S77();
            new S93();
            log("note");
            break;
        }
        log("note");
        new S50();
      } catch (IOException e) {
        if (x2 > 0) {
          send("msg16");
          new S30();
          new S9();
        } else {
          send("msg10");
          send("msg1");
          send("msg17");
        }
        new S21();
        send("msg11");
        new S92();
      }
      switch (event) {
        case EV1405:
          new S95();
          new S64();
          if (x6 > 0) {
            send("msg2");
          }
          send("msg1");
          break;
      }
      if (x1 > 0) {
        send("msg10");
      }
      switch (event) {
        case EV1406:
          try {
            new S66();
          } finally {
            send("msg12");
            send("msg2");
            new S43();
            new S27();
          }
          switch (event) {
            case EV1407:
              new S53();
              new S20();
              break;
            case EV1408:
              log("note");
              new S56();
              break;
            case EV1409:
              new State();
              break;
          }
          try {
            send("msg15");
          } finally {
            send("msg2");
          }
          break;
        case EV1410:
          new S29();
          new S32();
          break;
        case EV1411:
          new S97();
          switch (event) {
            case EV1412:
              new S52();
              new S50();
              send("msg19");
              break;
          }
          log("note");
          break;
      }
    } catch (IOException e) {
      new S3();
      log("note");
    }
  }
  void open() {
    send("msg9");
    log("note");
  }
  void close() {
    send("msg3");
    new S97();
    try {
      new S26();
    } finally {
      new Helper();
      log("note");
      send("msg15");
    }
  }
  void start() {
    send("msg7");
    send("msg5");
    new S69();
  }
  void stop() {
    send("msg2");
  }
  void pause() {
    new State();
    new Helper();
  }
}
