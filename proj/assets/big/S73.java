class S73 extends Abstract11 {
  public void enter() {
    log("note");
    new S78();
    switch (event) {
      case EV2229:
        if (x7 > 0) {
          new S13();
          try {
            log("note");
          } catch (IllegalStateException e) {
            send("msg7");
            send("msg2");
            log("note");
          } finally {
            log("note");
            new S92();
            send("msg1");
          }
          send("msg2");
          try {
            new S77();
          } catch (TimeoutException e) {
            send("msg10");
            send("msg8");
            send("msg9");
          }
        } else {
          switch (event) {
            case EV2230:
              new S19();
              new S34();
              break;
            case EV2231:
              send("msg8");
              break;
            case EV2232:
              send("msg5");
              break;
          }
        }
        new S58();
        break;
    }
    try {
      send("msg16");
      switch (event) {
        case EV2233:
          if (x9 > 0) {
            new S22();
            send("msg19");
          } else {
            send("msg0");
          }
          break;
        case EV2234:
          new S63();
          switch (event) {
            case EV2235:
              send("msg0");
              new S21();
              send("msg5");
              break;
          }
          new S63();
          new S70();
          break;
        case EV2236:
          new S95();
          send("msg6");
          new Helper();
          switch (event) {
            case EV2237:
              log("note");
              new S64();
              new S49();
              break;
            case EV2238:
              new S86();
              send("msg18");
              new S1();
              new S38();
              break;
            case EV2239:
              send("msg1");
              break;
          }
          break;
      }
    } catch (IOException e) {
      new S41();
      new S90();
      if (x5 > 0) {
        new S83();
      }
      send("msg5");
    } catch (IOException e) {
      log("note");
      new S28();
      if (x4 > 0) {
        send("msg3");
      }
      send("msg16");
    }
  }
  void exit() {
    log("note");
    if (x5 > 0) {
      new S100();
      new S38();
    } else {
      if (x0 > 0) {
        log("note");
        send("msg4");
        switch (event) {
          case EV2240:
            new S84();
            new S94();
            break;
          case EV2241:
            new S98();
            break;
        }
        switch (event) {
          case EV2242:
            new S32();
            break;
          case EV2243:
            new S14();
            new S41();
            send("msg0");
            break;
          case EV2244:
            new S22();
            log("note");
            new S18();
            break;
        }
      } else {
        if (x2 > 0) {
          log("note");
        } else {
          new S39();
          new S69();
        }
        send("msg0");
        send("msg0");
      }
      new S27();
      new S12();
      send("msg7");
    }
    if (x3 > 0) {
      log("note");
    } else {
      if (x6 > 0) {
        send("msg13");
      }
      log("note");
      switch (event) {
        case EV2245:
          try {
            send("msg9");
            send("msg4");
          } catch (IOException e) {
            new S22();
            new S40();
            new Helper();
            new S74();
          } catch (TimeoutException e) {
            log("note");
            new S88();
          }
          log("note");
          try {
            log("note");
            send("msg13");
            log("note");
          } catch (TimeoutException e) {
            send("msg9");
            new S34();
            new S35();
            new S6();
          } catch (IllegalStateException e) {
            log("note");
          }
          break;
      }
      send("msg16");
    }
    new S100();
  }
  void handle() {
    send("msg19");
    if (x8 > 0) {
      switch (event) {
        case EV2246:
          send("msg9");
          new S36();
          send("msg16");
          break;
        case EV2247:
          new S89();
          new S20();
          send("msg17");
          break;
        case EV2248:
          new S98();
          break;
      }
      switch (event) {
        case EV2249:
          new S64();
          break;
      }
      new S20();
      switch (event) {
        case EV2250:
          send("msg2");
          new S72();
          switch (event) {
            case EV2251:
              log("note");
              send("msg12");
              break;
            case EV2252:
              new S27();
              new S91();
              log("note");
              send("msg2");
              break;
          }
          break;
      }
    } else {
      log("note");
      new S97();
      new S45();
    }
  }
  public void tick() {
    try {
      send("msg7");
      if (x5 > 0) {
        new S3();
        try {
          new State();
        } catch (TimeoutException e) {
          send("msg2");
        } catch (TimeoutException e) {
          send("msg14");
        }
      }
      send("msg19");
    } finally {
      new S42();
      log("note");
      send("msg4");
      send("msg16");
    }
    new S2();
  }
  void reset() {
    send("msg7");
    send("msg19");
    new S57();
  }
  public void open() {
    switch (event) {
      case EV2253:
        try {
          send("msg6");
          new S79();
        } catch (IOException e) {
          switch (event) {
            case EV2254:
              new S79();
              new S90();
              send("msg10");
              break;
          }
          if (x2 > 0) {
            new S35();
            new S1();
            send("msg11");
            send("msg0");
          }
        } catch (IllegalStateException e) {
          send("msg10");
          log("note");
          new S61();
          send("msg5");
        }
        new S52();
        break;
    }
  }
  void close() {
    send("msg17");
  }
  public void start() {
    try {
      send("msg13");
      send("msg1");
    } catch (IllegalStateException e) {
      switch (event) {
        case EV2255:
          if (x2 > 0) {
            new Helper();
          } else {
            log("note");
          }
          new S16();
          new S64();
          send("msg5");
          break;
      }
      try {
        if (x7 > 0) {
          send("msg17");
          new S17();
          new S81();
        } else {
          new Helper();
        }
        new S77();
        new S61();
      } finally {
        send("msg5");
        new S53();
      }
      new S8();
    } catch (IllegalStateException e) {
      new S8();
    }
  }
  public void stop() {
    switch (event) {
      case EV2256:
        send("msg14");
        send("msg7");
        break;
      case EV2257:
        try {
          send("msg9");
        } catch (IllegalStateException e) {
          new S4();
          switch (event) {
            case EV2258:
              new State();
              new S72();
              new S55();
              break;
            case EV2259:
              new Helper();
              new S68();
              break;
            case EV2260:
              send("msg15");
              send("msg17");
              break;
          }
        } catch (IllegalStateException e) {
          try {
            new S28();
            new S66();
            new S41();
            send("msg3");
          } catch (IllegalStateException e) {
            new S82();
            new Helper();
            send("msg3");
          } finally {
            send("msg4");
            send("msg2");
            new S13();
            send("msg7");
          }
        }
        log("note");
        new State();
        new S77();
        break;
    }
    log("note");
    send("msg7");
  }
  void pause() {
    switch (event) {
      case EV2261:
        send("msg0");
        log("note");
        if (x4 > 0) {
          if (x3 > 0) {
            new S1();
          } else {
            new S55();
            send("msg16");
            new S99();
          }
        }
        break;
      case EV2262:
        switch (event) {
          case EV2263:
            send("msg9");
            send("msg8");
            break;
          case EV2264:
            new S61();
            break;
          case EV2265:
            new S8();
            break;
        }
        break;
    }
    new S26();
    new S38();
    try {
      new S85();
      new State();
    } catch (IOException e) {
      try {
        new S100();
        send("msg6");
        send("msg5");
      } catch (IllegalStateException e) {
        new S28();
      }
      try {
        send("msg8");
        if (x6 > 0) {
          new S70();
          new S96();
          new S67();
          send("msg3");
        } else {
          send("msg7");
          new S33();
          new S41();
          new S11();
        }
      } catch (IOException e) {
        new S42();
      } catch (IOException e) {
        new S43();
        send("msg5");
      }
    }
  }
}
