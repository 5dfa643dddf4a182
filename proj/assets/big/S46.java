class S46 extends Abstract4 {
  void enter() {
    new S56();
    new S22();
  }
  public void exit() {
    new S1();
    send("msg14");
    new S10();
    try {
      send("msg12");
      if (x6 > 0) {
        try {
          send("msg19");
          send("msg8");
        } catch (TimeoutException e) {
          new S8();
        } catch (TimeoutException e) {
          new S97();
          send("msg16");
        }
        if (x6 > 0) {
          new S6();
        }
        new S47();
        send("msg16");
      } else {
        if (x6 > 0) {
          new S58();
          send("msg5");
        } else {
          new S74();
        }
        try {
          new S94();
          send("msg9");
          send("msg16");
          new S84();
        } catch (IllegalStateException e) {
          new S57();
          new S61();
          new S41();
        } catch (IOException e) {
          send("msg18");
        }
        switch (event) {
          case EV1321:
            new S18();
            new S36();
            break;
        }
      }
      new S19();
    } catch (IllegalStateException e) {
      try {
        if (x8 > 0) {
          new State();
        } else {
          new S49();
        }
      } finally {
        send("msg14");
        try {
          new S11();
          new S54();
        } catch (IOException e) {
          new S59();
          new S69();
          log("note");
        } finally {
          log("note");
        }
        new S73();
      }
      if (x4 > 0) {
        new S93();
        new Helper();
      }
      new S89();
      send("msg5");
    }
  }
  public void handle() {
    if (x2 > 0) {
      new S57();
      new S73();
      new S12();
      send("msg2");
    } else {
      new S25();
    }
    send("msg9");
    log("note");
  }
  void tick() {
    switch (event) {
      case EV1322:
        new S32();
        break;
    }
    try {
      switch (event) {
        case EV1323:
          log("note");
          try {
            new S9();
            new S62();
            new S22();
            log("note");
          } catch (IllegalStateException e) {
            new S39();
            new S64();
          }
          new S16();
          break;
        case EV1324:
          switch (event) {
            case EV1325:
              send("msg10");
              log("note");
              send("msg14");
              break;
            case EV1326:
              new S87();
              new S40();
              new S43();
              break;
          }
          try {
            log("note");
          } catch (IllegalStateException e) {
            log("note");
            send("msg1");
            new S40();
          }
          break;
      }
      try {
        log("note");
        send("msg1");
      } catch (TimeoutException e) {
        new S44();
      }
      switch (event) {
        case EV1327:
          try {
            new S47();
            new S27();
            new S17();
            new S95();
          } finally {
            new S37();
            send("msg4");
            new S35();
            send("msg2");
          }
          new S21();
          switch (event) {
            case EV1328:
              send("msg4");
              break;
            case EV1329:
              new S74();
              new S92();
              log("note");
              new S9();
              break;
            case EV1330:
              new S63();
              break;
          }
          break;
        case EV1331:
          switch (event) {
            case EV1332:
              log("note");
              send("msg13");
              log("note");
              break;
            case EV1333:
              new State();
              new S70();
              break;
          }
          break;
        case EV1334:
          if (x2 > 0) {
            new S26();
            send("msg2");
            send("msg1");
            new S57();
          } else {
            new S17();
          }
          new S8();
          new S80();
          break;
      }
    } catch (IllegalStateException e) {
      if (x4 > 0) {
        switch (event) {
          case EV1335:
            send("msg14");
            new S4();
            new S2();
            new S10();
            break;
          case EV1336:
            send("msg9");
            new S52();
            send("msg11");
            break;
          case EV1337:
            new S44();
            new S13();
            new S29();
            break;
        }
        try {
          new S82();
          send("msg11");
          new S84();
          new S100();
        } finally {
          send("msg10");
          new S76();
          new State();
          new S59();
        }
      } else {
        try {
          new S43();
          send("msg12");
        } catch (IllegalStateException e) {
          send("msg14");
          new S44();
        } catch (IllegalStateException e) {
          send("msg13");
          new S37();
          new State();
        }
      }
      new S61();
      new S94();
    } finally {
      new S45();
      log("note");
      log("note");
      new S6();
    }
    log("note");
  }
  void reset() {
    if (x5 > 0) {
      new S4();
      new S43();
      new S88();
    }
  }
  public void open() {
    if (x9 > 0) {
      new S9();
      new State();
      try {
        try {
          new S89();
          send("msg13");
          new S86();
          send("msg5");
        } catch (IllegalStateException e) {
          new S18();
          send("msg13");
        }
        new S94();
        new S13();
        send("msg9");
      } catch (IOException e) {
        switch (event) {
          case EV1338:
            new S72();
            new Helper();
            break;
          case EV1339:
            new S18();
            send("msg11");
            send("msg6");
            send("msg1");
            break;
          case EV1340:
            new S88();
            break;
        }
        send("msg8");
      }
    }
    new S87();
  }
  void close() {
    new S5();
  }
  public void start() {
    new S41();
    new State();
  }
  void stop() {
    send("msg17");
    send("msg7");
  }
  void pause() {
    switch (event) {
      case EV1341:
        try {
          switch (event) {
            case EV1342:
              send("msg10");
              break;
            case EV1343:
              send("msg12");
              log("note");
              new S41();
              break;
            case EV1344:
              new S10();
              send("msg8");
              new S74();
              break;
          }
          new S18();
          switch (event) {
            case EV1345:
              new S11();
              new S24();
              new S81();
              break;
            case EV1346:
              log("note");
              break;
          }
          log("note");
        } catch (IllegalStateException e) {
          new S1();
          new S96();
          send("msg14");
          send("msg14");
        } catch (IllegalStateException e) {
          send("msg7");
          send("msg14");
          switch (event) {
            case EV1347:
              send("msg9");
              new S44();
              break;
            case EV1348:
              new S6();
              new S2();
              new S12();
              break;
            case EV1349:
              log("note");
              log("note");
              new S40();
              new S21();
              break;
          }
          new S1();
        }
        send("msg3");
        new S30();
        break;
      case EV1350:
        switch (event) {
          case EV1351:
            if (x4 > 0) {
              new S16();
              send("msg8");
              log("note");
            } else {
              new S59();
              new S35();
              new S56();
              new S43();
            }
            try {
              log("note");
              new S6();
              send("msg3");
              new S10();
            } catch (TimeoutException e) {
              send("msg17");
              new S65();
              send("msg12");
              new S24();
            } finally {
              send("msg10");
              new S94();
            }
            switch (event) {
              case EV1352:
                new S61();
                new S38();
                break;
              case EV1353:
                new S91();
                log("note");
                break;
            }
            switch (event) {
              case EV1354:
                new S22();
                send("msg9");
                send("msg10");
                break;
              case EV1355:
                new S6();
                send("msg11");
                new S26();
                new State();
                break;
              case EV1356:
                new S79();
                new S81();
                new S39();
                break;
            }
            break;
        }
        send("msg11");
        break;
    }
    new S71();
    if (x6 > 0) {
      new S17();
      new S37();
      log("note");
    }
    new S15();
  }
}
