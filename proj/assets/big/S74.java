class S74 extends Abstract3 {
  void enter() {
    switch (event) {
      case EV2266:
        send("msg18");
        break;
    }
    log("note");
    new S5();
    log("note");
  }
  void exit() {
    new Helper();
    new S1();
    new S82();
  }
  public void handle() {
    new S48();
    send("msg0");
    if (x4 > 0) {
      log("note");
      send("msg3");
      send("msg9");
      send("msg3");
    } else {
      new S84();
    }
  }
  void tick() {
    log("note");
  }
  void reset() {
    new S74();
    new S4();
    try {
      new S46();
      new S13();
    } catch (IllegalStateException e) {
      send("msg15");
    }
  }
  void open() {
    try {
      new S36();
    } catch (IllegalStateException e) {
      new S45();
      try {
        new S1();
        send("msg16");
      } catch (IllegalStateException e) {
        send("msg1");
      } catch (TimeoutException e) {
        switch (event) {
          case EV2267:
            send("msg9");
            new S40();
            new S61();
            break;
          case EV2268:
            log("note");
            send("msg16");
            new S5();
            send("msg13");
            break;
        }
      }
      switch (event) {
        case EV2269:
          new S36();
          new S25();
          break;
        case EV2270:
          new State();
          new S43();
          log("note");
          break;
      }
    } catch (IOException e) {
      new S26();
      switch (event) {
        case EV2271:
          if (x8 > 0) {
            new S92();
          } else {
            log("note");
          }
          new S46();
          try {
            log("note");
            new S61();
            send("msg11");
            log("note");
          } catch (IllegalStateException e) {
            send("msg12");
            log("note");
            new S20();
            new S53();
          } catch (IOException e) {
            new S41();
          }
          new S77();
          break;
        case EV2272:
          log("note");
          try {
            log("note");
            new S4();
            send("msg17");
            new S69();
          } catch (IOException e) {
            new S50();
            new S93();
          } finally {
            send("msg8");
            new State();
          }
          new S8();
          break;
        case EV2273:
          new S12();
          send("msg7");
          send("msg7");
          break;
      }
    }
    send("msg16");
    new S6();
  }
  void close() {
    send("msg11");
    if (x2 > 0) {
      send("msg17");
      new S63();
      if (x0 > 0) {
        new State();
        switch (event) {
          case EV2274:
            new S19();
            break;
        }
      } else {
        switch (event) {
          case EV2275:
            new S68();
            log("note");
            break;
          case EV2276:
            new S60();
            send("msg14");
            send("msg13");
            break;
          case EV2277:
            send("msg9");
            send("msg17");
            break;
        }
        new S67();
        switch (event) {
          case EV2278:
            new S29();
            break;
        }
        try {
          send("msg12");
          new S70();
          log("note");
        } catch (TimeoutException e) {
          new S11();
        }
      }
      if (x7 > 0) {
        new S44();
        new S77();
      } else {
        new S69();
        switch (event) {
          case EV2279:
            new S84();
            new S86();
            new S44();
            new S72();
            break;
          case EV2280:
            new S5();
            new S64();
            send("msg3");
            break;
          case EV2281:
            log("note");
            send("msg11");
            send("msg1");
            new S23();
            break;
        }
        send("msg11");
        send("msg14");
      }
    } else {
      send("msg6");
      if (x0 > 0) {
        new S59();
      }
    }
  }
  void start() {
    send("msg0");
    if (x8 > 0) {
      new S25();
      switch (event) {
        case EV2282:
          new S80();
          break;
      }
      try {
        send("msg5");
        new S43();
      } catch (IOException e) {
        log("note");
      } catch (IllegalStateException e) {
        new S5();
        switch (event) {
          case EV2283:
            new S30();
            break;
        }
        new S90();
        new S94();
      }
      if (x4 > 0) {
        log("note");
        switch (event) {
          case EV2284:
            send("msg1");
            break;
          case EV2285:
            new S23();
            send("msg6");
            new S54();
            send("msg9");
            break;
        }
      } else {
        switch (event) {
          case EV2286:
            new State();
            new S49();
            log("note");
            break;
          case EV2287:
            new S68();
            log("note");
            new Helper();
            new S34();
            break;
        }
        send("msg16");
      }
    } else {
      if (x4 > 0) {
        new S51();
        switch (event) {
          case EV2288:
            send("msg5");
            send("msg11");
            break;
          case EV2289:
            send("msg17");
            new Helper();
            new S41();
            break;
          case EV2290:
            send("msg12");
            break;
        }
        switch (event) {
          case EV2291:
            log("note");
            new S78();
            send("msg12");
            send("msg3");
            break;
          case EV2292:
            new S57();
            send("msg13");
            log("note");
            break;
          case EV2293:
            new S7();
            new S52();
            new S99();
            new S60();
            break;
        }
        switch (event) {
          case EV2294:
            new S94();
            break;
          case EV2295:
            new S84();
            break;
        }
      } else {
        new S29();
        try {
          new S29();
        } catch (IllegalStateException e) {
          new S51();
        }
      }
      if (x3 > 0) {
        send("msg10");
        if (x7 > 0) {
          new S56();
          send("msg1");
        }
        new S15();
        new S15();
      } else {
        try {
          send("msg15");
          new S14();
          new S63();
          send("msg16");
        } finally {
          send("msg15");
        }
        send("msg10");
      }
      send("msg16");
      send("msg6");
    }
  }
  void stop() {
    new S90();
    new S1();
  }
  public void pause() {
    new S25();
  }
}
