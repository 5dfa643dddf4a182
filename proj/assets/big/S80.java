class S80 extends Abstract19 {
  void enter() {
    new S75();
    send("msg8");
  }
  void exit() {
    send("msg13");
  }
  void handle() {
    if (x5 > 0) {
      new S13();
      switch (event) {
        case EV2452:
          new State();
          try {
            new S78();
          } catch (TimeoutException e) {
            new Helper();
            new S81();
          } catch (IllegalStateException e) {
            new State();
            new S70();
            log("note");
          }
          try {
            log("note");
            new S76();
            log("note");
            send("msg9");
          } catch (TimeoutException e) {
            new S38();
          } catch (TimeoutException e) {
            log("note");
          }
          new S56();
          break;
      }
      new S72();
      if (x5 > 0) {
        new S4();
        switch (event) {
          case EV2453:
            log("note");
            new S77();
            log("note");
            break;
        }
      }
    }
    if (x4 > 0) {
      new Helper();
      new S51();
    }
  }
  void tick() {
    if (x0 > 0) {
      if (x6 > 0) {
        send("msg11");
        send("msg8");
        switch (event) {
          case EV2454:
            send("msg18");
            new S9();
            new State();
            break;
          case EV2455:
            new S31();
            new S41();
            send("msg10");
            break;
          case EV2456:
            send("msg5");
            new State();
            log("note");
            send("msg15");
            break;
        }
      }
      send("msg12");
      new S50();
      switch (event) {
        case EV2457:
          send("msg0");
          if (x4 > 0) {
            new S83();
            new S35();
            send("msg4");
            log("note");
          }
          break;
        case EV2458:
          new S73();
          new S43();
          new State();
          switch (event) {
            case EV2459:
              new S42();
              log("note");
              break;
          }
          break;
      }
    } else {
      log("note");
    }
    new Helper();
    send("msg8");
  }
  void reset() {
    if (x0 > 0) {
      new S23();
      try {
        send("msg15");
        new S42();
        if (x2 > 0) {
          new S94();
          send("msg16");
          new S71();
          send("msg2");
        }
      } catch (IllegalStateException e) {
        new S71();
      } finally {
        new S92();
      }
    }
    send("msg14");
  }
  void open() {
    new S23();
    new S97();
  }
  public void close() {
    switch (event) {
      case EV2460:
        new S89();
        break;
      case EV2461:
        switch (event) {
          case EV2462:
            try {
              new S32();
            } catch (IOException e) {
              new State();
            } catch (TimeoutException e) {
              log("note");
              new S35();
            }
            new Helper();
            if (x2 > 0) {
              new S84();
            } else {
              log("note");
              new S77();
              new S80();
            }
            break;
          case EV2463:
            new S71();
            new S57();
            send("msg4");
            break;
          case EV2464:
            switch (event) {
              case EV2465:
                new S28();
                break;
            }
            switch (event) {
              case EV2466:
                send("msg9");
                break;
            }
            send("msg17");
            new S53();
            break;
        }
        new S96();
        send("msg6");
        new S38();
        break;
    }
    if (x7 > 0) {
      log("note");
      new S90();
      log("note");
    } else {
      new S16();
    }
    log("note");
    new S12();
  }
  void start() {
    if (x2 > 0) {
      switch (event) {
        case EV2467:
          try {
            send("msg18");
          } catch (TimeoutException e) {
            new S80();
          } catch (IllegalStateException e) {
            send("msg10");
            new S84();
          }
          try {
            new S30();
            send("msg13");
            send("msg7");
          } finally {
            log("note");
            new S44();
            new S20();
            new S43();
          }
          try {
            send("msg6");
            new S52();
            send("msg14");
            new S75();
          } catch (TimeoutException e) {
            send("msg13");
          }
          switch (event) {
            case EV2468:
              new S64();
              break;
            case EV2469:
              new S14();
              new State();
              break;
          }
          break;
        case EV2470:
          switch (event) {
            case EV2471:
              new S69();
              send("msg13");
              break;
            case EV2472:
              new S10();
              new S38();
              send("msg13");
              new S82();
              break;
            case EV2473:
              new S11();
              send("msg9");
              break;
          }
          break;
      }
      switch (event) {
        case EV2474:
          try {
            new S73();
          } catch (IllegalStateException e) {
            send("msg12");
          } catch (TimeoutException e) {
            log("note");
            send("msg15");
            log("note");
          }
          break;
        case EV2475:
          log("note");
          try {
            send("msg13");
            new S20();
            new S23();
          } catch (IllegalStateException e) {
            send("msg7");
            send("msg1");
            log("note");
          }
          break;
      }
    }
    new S22();
    try {
      new S5();
      switch (event) {
        case EV2476:
          if (x8 > 0) {
            new State();
            new S82();
            new S36();
          }
          new S54();
          break;
      }
      send("msg14");
    } catch (TimeoutException e) {
      try {
        send("msg5");
        switch (event) {
          case EV2477:
            send("msg11");
            new S57();
            new S57();
            break;
          case EV2478:
            new S88();
            new S69();
            break;
          case EV2479:
            new Helper();
            new S56();
            send("msg5");
            send("msg16");
            break;
        }
        try {
          send("msg6");
          new S68();
          send("msg10");
          new S83();
        } catch (IOException e) {
          new S99();
          send("msg8");
          new S96();
        }
      } finally {
        send("msg2");
        send("msg3");
        if (x4 > 0) {
          log("note");
          new State();
        } else {
          send("msg17");
          log("note");
        }
      }
      new S55();
      new S29();
    }
  }
  void stop() {
    if (x8 > 0) {
      new S33();
      send("msg15");
    } else {
      log("note");
      new S52();
      new S62();
      new State();
    }
    new S20();
    new S12();
    try {
      new S32();
      send("msg3");
    } catch (IllegalStateException e) {
      send("msg3");
      switch (event) {
        case EV2480:
          new S65();
          try {
            send("msg16");
            log("note");
            new S60();
          } catch (TimeoutException e) {
            new S8();
            send("msg5");
          }
          new S25();
          break;
      }
    } finally {
      log("note");
    }
  }
  public void pause() {
    send("msg3");
  }
}
