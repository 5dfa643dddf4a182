class S77 extends Abstract8 {
  void enter() {
    new S80();
    try {
      log("note");
      new S13();
      send("msg7");
      switch (event) {
        case EV2347:
          new S18();
          break;
        case EV2348:
          new Helper();
          send("msg16");
          if (x3 > 0) {
            new S47();
            new S25();
            new S92();
          } else {
            send("msg13");
            log("note");
            new S62();
          }
          break;
        case EV2349:
          log("note");
          break;
      }
    } finally {
      try {
        new S55();
        send("msg8");
      } catch (TimeoutException e) {
        if (x8 > 0) {
          new S98();
        }
        try {
          new S1();
        } catch (IllegalStateException e) {
          send("msg6");
          new S64();
        }
      } catch (IllegalStateException e) {
        log("note");
        new S10();
      }
      switch (event) {
        case EV2350:
          send("msg13");
          new S90();
          send("msg13");
          new S100();
          break;
      }
      new S89();
      send("msg4");
    }
    new S10();
    new S17();
  }
  void exit() {
    try {
      new S44();
      if (x3 > 0) {
        if (x8 > 0) {
          send("msg16");
        } else {
          new Helper();
          log("note");
          log("note");
          new S32();
        }
        send("msg12");
      } else {
        new S87();
        new State();
        send("msg11");
      }
      switch (event) {
        case EV2351:
          try {
            new S35();
            new S74();
            send("msg3");
            new S75();
          } catch (IOException e) {
            log("note");
            send("msg8");
            new S36();
          } finally {
            new S53();
            send("msg11");
            new S49();
          }
          if (x0 > 0) {
            new State();
            send("msg11");
          } else {
            new S99();
            new State();
            new S43();
          }
          break;
      }
    } catch (IllegalStateException e) {
      new S47();
      new S51();
      new S50();
    }
    switch (event) {
      case EV2352:
        switch (event) {
          case EV2353:
            switch (event) {
              case EV2354:
                new S15();
                send("msg15");
                new S25();
                new S51();
                break;
            }
            try {
              new Helper();
              send("msg18");
              new S17();
            } catch (IOException e) {
              send("msg8");
              new S9();
              new S16();
              new S100();
            } catch (IllegalStateException e) {
              log("note");
            }
            new S78();
            send("msg15");
            break;
        }
        switch (event) {
          case EV2355:
            if (x5 > 0) {
              new S40();
              new S86();
              send("msg10");
            } else {
              new S30();
              send("msg4");
              new S40();
              send("msg0");
            }
            break;
          case EV2356:
            try {
              new S44();
              send("msg12");
            } catch (IOException e) {
              send("msg18");
              new S26();
            } catch (IllegalStateException e) {
              send("msg13");
              new State();
              new S37();
              send("msg4");
            }
            try {
              new S14();
              send("msg17");
            } catch (TimeoutException e) {
              new S20();
            } catch (TimeoutException e) {
              send("msg6");
              new S2();
              new S65();
            }
            try {
              send("msg3");
              send("msg3");
              new S79();
              send("msg15");
            } catch (TimeoutException e) {
              new S67();
              send("msg16");
              new S12();
              send("msg0");
            } catch (IOException e) {
              log("note");
            }
            break;
        }
        send("msg8");
        break;
      case EV2357:
        send("msg2");
        switch (event) {
          case EV2358:
            new S94();
            new S91();
            new S41();
            break;
        }
        break;
      case EV2359:
        try {
          log("note");
          try {
            new S35();
            new S43();
          } catch (TimeoutException e) {
            send("msg18");
            log("note");
            send("msg5");
          } finally {
            send("msg1");
            new S95();
          }
        } catch (IllegalStateException e) {
          new S100();
        }
        break;
    }
    new S41();
  }
  public void handle() {
    new S59();
    new S97();
    try {
      send("msg5");
    } catch (IllegalStateException e) {
      send("msg17");
    }
    send("msg16");
  }
  public void tick() {
    switch (event) {
      case EV2360:
        send("msg10");
        send("msg14");
        new S51();
        send("msg17");
        break;
      case EV2361:
        try {
          new S89();
          send("msg16");
          if (x2 > 0) {
            new S62();
            log("note");
          } else {
            new S69();
          }
        } finally {
          if (x7 > 0) {
            new S42();
            new S59();
            send("msg9");
            send("msg9");
          } else {
            send("msg1");
            new S100();
            send("msg8");
            new Helper();
          }
          new S54();
          new S53();
          new Helper();
        }
        break;
      case EV2362:
        try {
          send("msg5");
          try {
            send("msg16");
            new S9();
          } catch (IOException e) {
            new S54();
            send("msg11");
            send("msg6");
          }
          new S64();
          if (x5 > 0) {
            new S62();
            new S8();
            new S80();
            send("msg0");
          } else {
            send("msg1");
          }
        } finally {
          new S78();
          new S28();
          send("msg17");
        }
        if (x0 > 0) {
          send("msg15");
          send("msg2");
        } else {
          new S14();
          new S88();
        }
        new S61();
        break;
    }
    log("note");
    try {
      new S8();
      try {
        switch (event) {
          case EV2363:
            send("msg7");
            break;
          case EV2364:
            new S53();
            new S30();
            send("msg13");
            break;
        }
        switch (event) {
          case EV2365:
            new S45();
            new S43();
            send("msg7");
            break;
          case EV2366:
            new S16();
            send("msg7");
            break;
          case EV2367:
            new S8();
            send("msg2");
            break;
        }
        new S24();
      } catch (IllegalStateException e) {
        switch (event) {
          case EV2368:
            new S28();
            send("msg0");
            send("msg5");
            break;
          case EV2369:
            new S46();
            new S62();
            send("msg17");
            log("note");
            break;
          case EV2370:
            send("msg15");
            send("msg13");
            break;
        }
        try {
          new S75();
          send("msg18");
          send("msg12");
          new S53();
        } catch (TimeoutException e) {
          send("msg7");
          new S53();
          send("msg18");
          send("msg19");
        } catch (IOException e) {
          new S13();
          new S18();
          log("note");
          new S29();
        }
      } catch (TimeoutException e) {
        new S56();
        send("msg10");
        send("msg8");
      }
    } catch (TimeoutException e) {
      try {
        send("msg16");
        if (x1 > 0) {
          send("msg11");
        } else {
          send("msg18");
          new S92();
          new S58();
        }
      } catch (IOException e) {
        switch (event) {
          case EV2371:
            new Helper();
            new S64();
            send("msg6");
            break;
          case EV2372:
            new S11();
            break;
        }
      } catch (TimeoutException e) {
        new S99();
        new S99();
        new S3();
        send("msg3");
      }
      new S79();
      log("note");
    } catch (IllegalStateException e) {
      if (x1 > 0) {
        switch (event) {
          case EV2373:
            new S29();
            new S46();
            send("msg5");
            break;
          case EV2374:
            new S80();
            new S6();
            new S35();
            break;
          case EV2375:
            send("msg4");
            new S48();
            new S35();
            send("msg2");
            break;
        }
        if (x8 > 0) {
          send("msg6");
          new S16();
          new S32();
        } else {
          send("msg8");
          new S50();
          send("msg17");
        }
        new S64();
      } else {
        log("note");
        try {
          new S81();
          new Helper();
          new State();
          log("note");
        } catch (TimeoutException e) {
          send("msg15");
          send("msg6");
        } catch (IllegalStateException e) {
          send("msg19");
          send("msg6");
          new S52();
          log("note");
        }
        try {
          send("msg15");
          new S65();
          log("note");
          new S99();
        } finally {
          new State();
          new State();
          new S19();
        }
        new State();
      }
      new S28();
      send("msg14");
    }
    new S58();
  }
  void reset() {
    send("msg15");
  }
  void open() {
    new S35();
    try {
      try {
        new S5();
        new S7();
        switch (event) {
          case EV2376:
            send("msg5");
            break;
          case EV2377:
            new S72();
            send("msg6");
            log("note");
            break;
          case EV2378:
            new S74();
            break;
        }
        send("msg5");
      } catch (IllegalStateException e) {
        new S10();
        send("msg13");
        send("msg4");
        if (x2 > 0) {
          send("msg19");
          log("note");
          send("msg17");
          new S10();
        }
      } catch (IOException e) {
        if (x1 > 0) {
          send("msg2");
          new S68();
        }
        send("msg13");
        log("note");
      }
      new S63();
      new Helper();
      switch (event) {
        case EV2379:
          send("msg12");
          break;
        case EV2380:
          send("msg9");
          break;
        case EV2381:
          switch (event) {
            case EV2382:
              send("msg16");
              new S33();
              break;
          }
          break;
      }
    } catch (IOException e) {
      try {
        log("note");
        new S93();
        new S91();
      } catch (IOException e) {
        log("note");
        try {
          new S91();
        } catch (IOException e) {
          send("msg18");
          new S54();
          send("msg1");
          new S45();
        }
        new S92();
        send("msg10");
      }
      try {
        new S80();
        switch (event) {
          case EV2383:
            new S74();
            new S46();
            send("msg15");
            break;
        }
        try {
          new S33();
          send("msg16");
          new S61();
          send("msg19");
        } catch (IllegalStateException e) {
          new S5();
          send("msg4");
          new S11();
        } catch (TimeoutException e) {
          send("msg15");
          new S95();
          new S20();
        }
      } catch (IllegalStateException e) {
        if (x9 > 0) {
          log("note");
          send("msg11");
        }
        new S100();
        send("msg6");
      }
    }
    new S29();
  }
  void close() {
    switch (event) {
      case EV2384:
        send("msg14");
        break;
    }
  }
  void start() {
    if (x7 > 0) {
      new S73();
    } else {
      send("msg6");
      new S61();
      new Helper();
      send("msg3");
    }
    switch (event) {
      case EV2385:
        new S14();
        break;
      case EV2386:
        new S83();
        new S94();
        break;
      case EV2387:
        send("msg11");
        try {
          new S60();
          new S73();
          try {
            new S34();
            log("note");
          } finally {
            send("msg5");
            send("msg1");
            send("msg5");
          }
        } catch (IllegalStateException e) {
          log("note");
        } finally {
          new S98();
          new S31();
          if (x6 > 0) {
            new S26();
            new S95();
            send("msg8");
            send("msg3");
          } else {
            new S64();
            send("msg12");
          }
        }
        break;
    }
    new State();
  }
  public void stop() {
    send("msg6");
    send("msg3");
    new S25();
  }
  void pause() {
    send("msg6");
    if (x1 > 0) {
      new S99();
      new S22();
    } else {
      send("msg4");
      send("msg1");
      log("note");
      send("msg2");
    }
    new S85();
  }
}
