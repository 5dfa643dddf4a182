class S76 extends Abstract6 {
  void enter() {
    try {
      if (x3 > 0) {
        send("msg7");
      }
      switch (event) {
        case EV2308:
          new S63();
          log("note");
          new S64();
          break;
        case EV2309:
          send("msg0");
          if (x9 > 0) {
            send("msg5");
          }
          new S53();
          break;
      }
      new S18();
    } catch (IOException e) {
      log("note");
    } catch (IllegalStateException e) {
      new S65();
      new S77();
      send("msg18");
    }
  }
  void exit() {
    switch (event) {
      case EV2310:
        send("msg8");
        try {
          new State();
          new S87();
          new S14();
        } catch (IOException e) {
          send("msg10");
          new Helper();
          switch (event) {
            case EV2311:
              new S88();
              send("msg10");
              new S13();
              send("msg18");
              break;
          }
          if (x9 > 0) {
            log("note");
            new S22();
          }
        } catch (IllegalStateException e) {
          log("note");
          send("msg16");
          new S6();
        }
        new S58();
        send("msg7");
        break;
      case EV2312:
        if (x0 > 0) {
          send("msg9");
          new S44();
          new S36();
        }
        new S13();
        break;
      case EV2313:
        send("msg18");
        break;
    }
    try {
      try {
        if (x1 > 0) {
          new S12();
          new S14();
          new State();
          log("note");
        } else {
          send("msg13");
          new S42();
        }
        switch (event) {
          case EV2314:
            new State();
            log("note");
            break;
          case EV2315:
            new S61();
            break;
          case EV2316:
            send("msg8");
            new S53();
            break;
        }
        new S100();
        new S13();
      } catch (TimeoutException e) {
        new Helper();
      } finally {
        switch (event) {
          case EV2317:
            send("msg17");
            send("msg0");
            send("msg13");
            break;
          case EV2318:
            new S27();
            send("msg2");
            new S67();
            new S54();
            break;
        }
        new S45();
        new S45();
      }
      send("msg10");
    } catch (IllegalStateException e) {
      new S68();
      new S43();
      try {
        new S32();
        try {
          send("msg17");
          new S82();
        } catch (IOException e) {
          log("note");
        }
        log("note");
        try {
          send("msg2");
          send("msg9");
        } catch (IOException e) {
          new S55();
        } finally {
          new S13();
          new S4();
        }
      } catch (IOException e) {
        new State();
        new State();
        switch (event) {
          case EV2319:
            new S48();
            break;
          case EV2320:
            new S51();
            break;
        }
        new Helper();
      } catch (IllegalStateException e) {
        log("note");
      }
    } finally {
      if (x0 > 0) {
        switch (event) {
          case EV2321:
            send("msg11");
            new S54();
            log("note");
            new S33();
            break;
        }
        if (x6 > 0) {
          new S37();
          new S86();
          new S40();
        }
      } else {
        if (x1 > 0) {
          new S86();
          new S80();
          new S55();
        } else {
          new S3();
          new S61();
        }
        try {
          new S31();
          new State();
          new S27();
          new S5();
        } catch (IllegalStateException e) {
          new S97();
        } catch (IOException e) {
          send("msg4");
          send("msg1");
          new S98();
          send("msg18");
        }
        if (x0 > 0) {
          log("note");
          send("msg16");
          new State();
          new Helper();
        }
      }
      new S49();
    }
    if (x2 > 0) {
      try {
        send("msg7");
        new S17();
        switch (event) {
          case EV2322:
            new S35();
            send("msg9");
            break;
          case EV2323:
            send("msg19");
            new S45();
            send("msg17");
            break;
        }
        new S31();
      } finally {
        send("msg19");
        if (x5 > 0) {
          log("note");
          new S93();
        }
        if (x2 > 0) {
          new S25();
          new S18();
        }
        switch (event) {
          case EV2324:
            new S48();
            new S7();
            break;
        }
      }
    } else {
      new S99();
      send("msg3");
      try {
        if (x2 > 0) {
          new S91();
          new S3();
          new S51();
        } else {
          log("note");
          new S15();
        }
        new S93();
        try {
          log("note");
          send("msg6");
          log("note");
          new S83();
        } catch (IllegalStateException e) {
          new S28();
          send("msg19");
          send("msg8");
          new S100();
        }
        new S25();
      } catch (IllegalStateException e) {
        send("msg2");
        if (x0 > 0) {
          send("msg13");
          new S91();
          new S11();
          new State();
        } else {
          send("msg10");
          send("msg5");
          send("msg18");
          new S64();
        }
        send("msg2");
      }
      new S52();
    }
    switch (event) {
      case EV2325:
        switch (event) {
          case EV2326:
            if (x5 > 0) {
              send("msg14");
              send("msg8");
              log("note");
              new S70();
            } else {
              send("msg19");
              new S83();
              new S38();
              send("msg12");
            }
            break;
          case EV2327:
            new S20();
            if (x4 > 0) {
              send("msg1");
            } else {
              new S34();
              log("note");
            }
            break;
        }
        log("note");
        new S90();
        send("msg15");
        break;
      case EV2328:
        switch (event) {
          case EV2329:
            send("msg3");
            new S91();
            if (x4 > 0) {
              new S57();
            }
            new S12();
            break;
          case EV2330:
            send("msg17");
            break;
        }
        switch (event) {
          case EV2331:
            new S40();
            try {
              new S45();
              send("msg3");
              new S76();
            } catch (TimeoutException e) {
              new S79();
            } catch (TimeoutException e) {
              new S80();
              send("msg19");
            }
            break;
        }
        send("msg15");
        new S64();
        break;
      case EV2332:
        log("note");
        send("msg7");
        break;
    }
  }
  public void handle() {
    if (x9 > 0) {
      send("msg4");
      if (x0 > 0) {
        new S53();
        send("msg11");
        new S1();
      } else {
        switch (event) {
          case EV2333:
            log("note");
            send("msg12");
            send("msg17");
            break;
        }
      }
    } else {
      new S80();
      new S2();
      log("note");
      send("msg19");
    }
    try {
      switch (event) {
        case EV2334:
          log("note");
          new S3();
          try {
            log("note");
            new S26();
          } finally {
            new S20();
            new S56();
            log("note");
            send("msg11");
          }
          new S35();
          break;
      }
      new S75();
    } finally {
      log("note");
      log("note");
    }
  }
  void tick() {
    try {
      try {
        new S77();
        send("msg3");
        if (x1 > 0) {
          send("msg19");
          send("msg7");
          send("msg2");
          log("note");
        } else {
          send("msg12");
          log("note");
        }
      } catch (TimeoutException e) {
        send("msg4");
      }
    } finally {
      send("msg14");
    }
  }
  void reset() {
    new S19();
  }
  void open() {
    new S14();
  }
  void close() {
    if (x6 > 0) {
      switch (event) {
        case EV2335:
          send("msg7");
          switch (event) {
            case EV2336:
              new S69();
              send("msg2");
              break;
            case EV2337:
              send("msg17");
              break;
          }
          break;
        case EV2338:
          new S52();
          try {
            new S16();
            log("note");
            send("msg18");
            new S31();
          } finally {
            send("msg6");
          }
          send("msg10");
          if (x8 > 0) {
            new S40();
            new S31();
            new S37();
            new S56();
          } else {
            log("note");
            log("note");
            new S99();
          }
          break;
        case EV2339:
          send("msg5");
          break;
      }
    } else {
      new S14();
    }
    send("msg16");
  }
  void start() {
    new S61();
    switch (event) {
      case EV2340:
        log("note");
        new S97();
        new S93();
        break;
    }
  }
  void stop() {
    send("msg10");
  }
  public void pause() {
    new S88();
    new S98();
    if (x8 > 0) {
      send("msg1");
    } else {
      switch (event) {
        case EV2341:
          if (x5 > 0) {
            send("msg10");
            send("msg4");
            send("msg19");
          } else {
            new S74();
          }
          break;
        case EV2342:
          send("msg14");
          new S74();
          switch (event) {
            case EV2343:
              new S81();
              new S30();
              break;
            case EV2344:
              new S3();
              new S78();
              new S5();
              new Helper();
              break;
            case EV2345:
              new S60();
              log("note");
              send("msg1");
              break;
          }
          new S20();
          break;
        case EV2346:
          try {
            send("msg2");
          } catch (TimeoutException e) {
            new S77();
            new S25();
          } finally {
            new State();
            send("msg10");
          }
          break;
      }
      log("note");
    }
    new S13();
  }
}
