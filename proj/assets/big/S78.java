class S78 extends Abstract9 {
  void enter() {
    send("msg1");
    try {
      new State();
      try {
        send("msg3");
      } finally {
        send("msg9");
      }
      new S59();
    } catch (IOException e) {
      switch (event) {
        case EV2388:
          if (x0 > 0) {
            new S99();
            new S97();
            new S100();
          }
          send("msg3");
          send("msg16");
          break;
        case EV2389:
          new S5();
          break;
      }
      send("msg8");
    }
    try {
      if (x1 > 0) {
        new S72();
        try {
          new S70();
          send("msg19");
          new State();
          send("msg12");
        } catch (TimeoutException e) {
          new S3();
          send("msg7");
          new S32();
        } catch (IllegalStateException e) {
          send("msg10");
          new S5();
        }
      }
      new Helper();
      send("msg2");
      new S45();
    } catch (IOException e) {
      try {
        if (x8 > 0) {
          new S38();
        } else {
          send("msg10");
          new S75();
        }
        new S28();
        if (x0 > 0) {
          send("msg12");
          new S14();
          new S78();
        } else {
          log("note");
          new S22();
          new S50();
        }
        try {
          log("note");
          new S29();
          log("note");
        } catch (IllegalStateException e) {
          new S81();
        } catch (IOException e) {
          send("msg11");
          send("msg0");
          new S44();
          new S18();
        }
      } catch (TimeoutException e) {
        new S8();
      } catch (TimeoutException e) {
        try {
          new State();
          log("note");
          new Helper();
          new S8();
        } catch (TimeoutException e) {
          log("note");
          new S27();
        } catch (TimeoutException e) {
          new S87();
          new S84();
          send("msg15");
          new S32();
        }
        switch (event) {
          case EV2390:
            new S89();
            break;
          case EV2391:
            new S99();
            log("note");
            log("note");
            send("msg12");
            break;
        }
      }
      new Helper();
    }
    send("msg13");
  }
  public void exit() {
    new S40();
    new S48();
    if (x8 > 0) {
      new S26();
      new S90();
      try {
        try {
          send("msg15");
          send("msg3");
        } catch (IOException e) {
          send("msg17");
          send("msg17");
          send("msg9");
          new S64();
        }
        try {
          new S85();
        } catch (IOException e) {
          new S1();
        } finally {
          new S15();
          new S41();
          log("note");
          new S58();
        }
        new S84();
      } catch (IllegalStateException e) {
        switch (event) {
          case EV2392:
            new S74();
            new S31();
            break;
        }
        try {
          new S68();
          send("msg7");
        } catch (IllegalStateException e) {
          new S27();
          new S9();
          send("msg16");
        } catch (TimeoutException e) {
          new S68();
          new S18();
        }
      }
    } else {
      new S46();
    }
    if (x6 > 0) {
      send("msg12");
      try {
        new S42();
        log("note");
        switch (event) {
          case EV2393:
            new S46();
            new S23();
            break;
          case EV2394:
            new S84();
            send("msg0");
            send("msg0");
            break;
          case EV2395:
            send("msg18");
            log("note");
            new S20();
            send("msg3");
            break;
        }
      } finally {
        switch (event) {
          case EV2396:
            new S20();
            send("msg3");
            new S16();
            new S35();
            break;
        }
        send("msg14");
      }
      new S72();
    }
  }
  public void handle() {
    switch (event) {
      case EV2397:
        send("msg9");
        send("msg1");
        send("msg13");
        break;
    }
    send("msg10");
    new S91();
    new S65();
  }
  public void tick() {
    new S37();
    if (x9 > 0) {
      switch (event) {
        case EV2398:
          switch (event) {
            case EV2399:
              new S73();
              new S61();
              send("msg1");
              break;
          }
          new S87();
          break;
        case EV2400:
          switch (event) {
            case EV2401:
              new State();
              send("msg17");
              break;
            case EV2402:
              new S88();
              new S92();
              break;
            case EV2403:
              new S58();
              new S82();
              new S3();
              break;
          }
          log("note");
          break;
        case EV2404:
          new S22();
          new S28();
          new S72();
          break;
      }
      new S95();
      new State();
    } else {
      switch (event) {
        case EV2405:
          new S68();
          send("msg10");
          switch (event) {
            case EV2406:
              new S21();
              break;
            case EV2407:
              new S94();
              send("msg12");
              new S84();
              send("msg4");
              break;
            case EV2408:
              new S95();
              break;
          }
          send("msg18");
          break;
        case EV2409:
          new S27();
          break;
        case EV2410:
          new S80();
          try {
            new S21();
            new S59();
            send("msg14");
          } catch (TimeoutException e) {
            send("msg18");
            new S65();
          }
          break;
      }
      send("msg16");
      send("msg11");
      send("msg10");
    }
    send("msg7");
  }
  public void reset() {
    new State();
    send("msg14");
    if (x2 > 0) {
      if (x3 > 0) {
        new S31();
        new S9();
      }
      new S9();
    }
  }
  public void open() {
    send("msg11");
    send("msg15");
    switch (event) {
      case EV2411:
        send("msg14");
        break;
      case EV2412:
        new S11();
        break;
    }
    new S72();
  }
  public void close() {
    log("note");
  }
  void start() {
    send("msg12");
    if (x6 > 0) {
      if (x8 > 0) {
        new S31();
      }
      try {
        new S70();
        send("msg11");
      } catch (IOException e) {
        send("msg14");
      }
    } else {
      send("msg9");
    }
    if (x8 > 0) {
      try {
        if (x1 > 0) {
          send("msg3");
          new S61();
          send("msg1");
          send("msg17");
        }
        send("msg5");
        log("note");
        try {
          new S9();
        } catch (IllegalStateException e) {
          send("msg0");
          new S85();
        } catch (IllegalStateException e) {
          new S13();
        }
      } catch (TimeoutException e) {
        switch (event) {
          case EV2413:
            new S53();
            break;
          case EV2414:
            send("msg13");
            break;
          case EV2415:
            new S15();
            send("msg16");
            new S60();
            break;
        }
        send("msg6");
        send("msg12");
        send("msg19");
      }
      if (x4 > 0) {
        send("msg5");
        new S6();
        new S36();
        try {
          new S26();
          new S93();
          new S7();
          send("msg15");
        } catch (IOException e) {
          send("msg7");
        }
      }
    }
  }
  void stop() {
    new S83();
  }
  void pause() {
    new S12();
    if (x5 > 0) {
      new S18();
      log("note");
      new S17();
    }
  }
}
