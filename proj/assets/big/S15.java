class S15 extends Abstract11 {
  public void enter() {
    new S90();
  }
  void exit() {
    send("msg6");
    send("msg17");
  }
  void handle() {
    log("note");
    send("msg18");
  }
  public void tick() {
    new S16();
    new S3();
  }
  void reset() {
    if (x7 > 0) {
      send("msg13");
      if (x2 > 0) {
        if (x8 > 0) {
          send("msg1");
          new S30();
          send("msg11");
          send("msg15");
        } else {
          send("msg7");
          new S2();
          new S11();
        }
        send("msg13");
      } else {
        send("msg3");
        send("msg8");
        send("msg3");
        send("msg3");
      }
      try {
        new S100();
        send("msg15");
        send("msg0");
        switch (event) {
          case EV495:
            new S44();
            new S41();
            break;
          case EV496:
            new S26();
            break;
          case EV497:
            log("note");
            new S8();
            new S95();
            new S13();
            break;
        }
      } finally {
        new S4();
        switch (event) {
          case EV498:
            new S95();
            break;
        }
      }
      send("msg4");
    } else {
      new S1();
      new S26();
      try {
        new S95();
      } finally {
        send("msg9");
        new S84();
      }
      if (x7 > 0) {
        send("msg6");
        new S66();
      }
    }
  }
  void open() {
    if (x8 > 0) {
      send("msg1");
      new S70();
      try {
        send("msg13");
        new S86();
      } catch (IOException e) {
        new S46();
        log("note");
      }
    }
    switch (event) {
      case EV499:
        new S27();
        try {
          new S97();
          new S18();
          new S30();
        } catch (IOException e) {
          log("note");
        } finally {
          try {
            send("msg15");
            send("msg18");
            send("msg3");
          } catch (TimeoutException e) {
            new Helper();
            send("msg12");
          } catch (TimeoutException e) {
            new S96();
            new S100();
          }
          try {
            new S74();
            new S91();
          } catch (IllegalStateException e) {
            new S12();
          } catch (TimeoutException e) {
            new S87();
          }
          new S50();
          switch (event) {
            case EV500:
              log("note");
              new S69();
              new S6();
              send("msg5");
              break;
            case EV501:
              new S62();
              log("note");
              log("note");
              log("note");
              break;
          }
        }
        try {
          new State();
          send("msg19");
        } catch (IllegalStateException e) {
          if (x8 > 0) {
            new State();
            new S100();
            log("note");
          } else {
            send("msg8");
            new S89();
          }
        } catch (TimeoutException e) {
          if (x7 > 0) {
            new S10();
            new S72();
            new S11();
          }
          new S5();
          send("msg14");
        }
        new State();
        break;
      case EV502:
        if (x5 > 0) {
          switch (event) {
            case EV503:
              send("msg13");
              new S88();
              new S62();
              send("msg13");
              break;
            case EV504:
              send("msg5");
              send("msg2");
              break;
          }
          new S53();
        }
        break;
    }
    new S40();
    if (x6 > 0) {
      if (x9 > 0) {
        new S47();
        new S48();
      }
      new S50();
    }
  }
  void close() {
    try {
      try {
        if (x3 > 0) {
          new S15();
          new S79();
          send("msg13");
        } else {
          new S62();
          send("msg3");
          new S96();
        }
      } finally {
        switch (event) {
          case EV505:
            new S7();
            new S100();
            break;
          case EV506:
            send("msg15");
            new S55();
            log("note");
            break;
        }
        if (x9 > 0) {
          new S25();
        } else {
          new S19();
          send("msg19");
          send("msg1");
        }
        log("note");
        if (x2 > 0) {
          new S81();
          send("msg15");
        } else {
          new S1();
        }
      }
    } catch (IOException e) {
      send("msg8");
      switch (event) {
        case EV507:
          try {
            send("msg9");
            new S28();
          } catch (IllegalStateException e) {
            send("msg12");
          } catch (TimeoutException e) {
            send("msg4");
            send("msg0");
            log("note");
            log("note");
          }
          send("msg16");
          switch (event) {
            case EV508:
              new S59();
              new S39();
              send("msg15");
              break;
            case EV509:
              new S22();
              new S94();
              break;
          }
          break;
      }
      new S62();
      new S87();
    } catch (TimeoutException e) {
      if (x4 > 0) {
        new S44();
      }
      log("note");
      try {
        new S14();
        send("msg19");
      } catch (TimeoutException e) {
        new Helper();
      } catch (IllegalStateException e) {
        if (x4 > 0) {
          send("msg12");
          send("msg3");
          new State();
          new S36();
        }
        new S78();
        log("note");
        send("msg6");
      }
      log("note");
    }
    new S62();
    new S46();
    log("note");
  }
  public void start() {
    send("msg16");
    new S93();
    new S10();
    send("msg12");
  }
  public void stop() {
    new Helper();
    new S95();
  }
  void pause() {
    try {
      switch (event) {
        case EV510:
          new S54();
          try {
            send("msg19");
          } finally {
            log("note");
          }
          break;
        case EV511:
          new S7();
          break;
      }
      send("msg6");
      try {
        new S52();
      } catch (IOException e) {
        try {
          send("msg4");
          new S76();
          new S8();
        } finally {
          new S78();
          new S17();
        }
        send("msg8");
        new S71();
        send("msg15");
      }
      try {
        new S71();
        send("msg10");
        send("msg15");
        try {
          new Helper();
          new S56();
          new S90();
        } catch (IllegalStateException e) {
          log("note");
          send("msg2");
          new S50();
        } catch (TimeoutException e) {
          new S36();
          log("note");
          new S32();
        }
      } catch (IOException e) {
        switch (event) {
          case EV512:
            send("msg2");
            send("msg1");
            send("msg14");
            break;
          case EV513:
            send("msg1");
            new S23();
            send("msg12");
            log("note");
            break;
        }
      } finally {
        new S2();
        log("note");
        new S39();
        new S41();
      }
    } catch (IllegalStateException e) {
      send("msg10");
    }
    if (x9 > 0) {
      if (x0 > 0) {
        if (x3 > 0) {
          new S34();
          new S90();
          send("msg13");
        }
        new S11();
        switch (event) {
          case EV514:
            send("msg5");
            send("msg17");
            send("msg10");
            break;
          case EV515:
            log("note");
            new S11();
            break;
        }
        new S87();
      }
    }
    if (x5 > 0) {
      new S44();
      new S92();
      send("msg0");
    }
  }
}
