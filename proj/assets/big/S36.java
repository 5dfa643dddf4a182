class S36 extends Abstract15 {
  public void enter() {
    if (x5 > 0) {
      new S79();
      send("msg14");
      send("msg10");
      try {
        new S93();
      } catch (IOException e) {
        switch (event) {
          case EV1006:
            send("msg2");
            break;
          case EV1007:
            new S68();
            send("msg11");
            log("note");
            new S16();
            break;
          case EV1008:
            send("msg17");
            new State();
            break;
        }
      } catch (TimeoutException e) {
        if (x8 > 0) {
          send("msg7");
        } else {
          send("msg13");
          new S18();
        }
        new S92();
        new S28();
      }
    }
  }
  void exit() {
    send("msg1");
    new S35();
    new S26();
  }
  void handle() {
    switch (event) {
      case EV1009:
        send("msg12");
        break;
      case EV1010:
        new S85();
        try {
          send("msg5");
          try {
            new S91();
            new S84();
            send("msg13");
          } catch (IOException e) {
            new S79();
            new S93();
            send("msg4");
            send("msg5");
          } catch (IllegalStateException e) {
            send("msg4");
          }
        } catch (IllegalStateException e) {
          log("note");
          new S35();
          new S49();
          send("msg1");
        }
        send("msg16");
        break;
      case EV1011:
        send("msg13");
        new S74();
        break;
    }
  }
  void tick() {
    try {
      new S10();
    } catch (TimeoutException e) {
      send("msg10");
      log("note");
      send("msg10");
    } catch (IOException e) {
      send("msg1");
      new S32();
    }
    send("msg14");
    switch (event) {
      case EV1012:
        try {
          new S9();
          new S6();
          new S74();
          new S90();
        } catch (TimeoutException e) {
          send("msg19");
          log("note");
          new S10();
        } catch (IOException e) {
          try {
            send("msg1");
            send("msg17");
          } catch (IllegalStateException e) {
            new State();
            new S86();
          }
          if (x0 > 0) {
            new State();
            send("msg6");
            send("msg13");
          } else {
            send("msg15");
            new S22();
            new S24();
          }
        }
        new S2();
        send("msg11");
        break;
    }
    new S10();
  }
  void reset() {
    try {
      new S30();
      new S91();
    } catch (IllegalStateException e) {
      if (x7 > 0) {
        try {
          new S68();
          send("msg11");
        } finally {
          log("note");
          send("msg18");
          new S35();
        }
        try {
          send("msg19");
        } catch (IllegalStateException e) {
          new State();
          send("msg17");
          new S94();
          new S91();
        } catch (TimeoutException e) {
          new S9();
          send("msg6");
        }
        try {
          send("msg14");
          send("msg12");
          send("msg15");
        } catch (TimeoutException e) {
          new S52();
          new S57();
          new S16();
        } catch (IOException e) {
          new S1();
          send("msg14");
          new S75();
        }
        new S14();
      }
    } catch (IOException e) {
      switch (event) {
        case EV1013:
          new S51();
          switch (event) {
            case EV1014:
              send("msg5");
              log("note");
              new Helper();
              new S70();
              break;
          }
          send("msg14");
          break;
        case EV1015:
          new S94();
          send("msg13");
          if (x9 > 0) {
            send("msg6");
            send("msg2");
          } else {
            new S82();
            new State();
          }
          break;
        case EV1016:
          new S47();
          send("msg17");
          break;
      }
      new S85();
      new S25();
      try {
        log("note");
        new S69();
        switch (event) {
          case EV1017:
            send("msg0");
            new S16();
            new State();
            send("msg9");
            break;
          case EV1018:
            new S20();
            new S20();
            break;
          case EV1019:
            log("note");
            new S77();
            new S26();
            send("msg6");
            break;
        }
        switch (event) {
          case EV1020:
            new S36();
            new S14();
            break;
          case EV1021:
            new S89();
            send("msg15");
            break;
          case EV1022:
            new S60();
            send("msg14");
            new S82();
            new S62();
            break;
        }
      } catch (TimeoutException e) {
        send("msg14");
        switch (event) {
          case EV1023:
            new S72();
            new S85();
            new S21();
            break;
        }
        try {
          send("msg13");
          send("msg12");
          new S56();
        } catch (IllegalStateException e) {
          new S36();
          new S16();
        } finally {
          log("note");
          new S38();
        }
        new S24();
      } finally {
        switch (event) {
          case EV1024:
            new S87();
            log("note");
            new S17();
            break;
        }
        if (x0 > 0) {
          new Helper();
        }
        if (x9 > 0) {
          send("msg4");
          new S37();
          send("msg11");
        } else {
          new S51();
          new S51();
          new Helper();
          new S15();
        }
      }
    }
    new S39();
  }
  void open() {
    log("note");
    new S57();
    send("msg8");
    send("msg7");
  }
  void close() {
    send("msg12");
    try {
      send("msg1");
      if (x8 > 0) {
        send("msg13");
      } else {
        send("msg9");
      }
      new S56();
    } catch (IllegalStateException e) {
      log("note");
      new S78();
      try {
        new S77();
        new S50();
        new S84();
        send("msg13");
      } catch (IOException e) {
        send("msg18");
        if (x5 > 0) {
          send("msg12");
          send("msg7");
          send("msg7");
        }
        send("msg2");
      }
    }
    if (x8 > 0) {
      if (x3 > 0) {
        send("msg9");
        new S93();
        new S11();
        send("msg14");
      } else {
        switch (event) {
          case EV1025:
            send("msg17");
            break;
          case EV1026:
            new S88();
            new State();
            break;
        }
        send("msg0");
        if (x7 > 0) {
          send("msg6");
          new Helper();
        } else {
          send("msg9");
          send("msg4");
          log("note");
          new S10();
        }
      }
      new S36();
      new S15();
    } else {
      send("msg11");
      new S25();
      send("msg14");
    }
  }
  void start() {
    new S65();
    send("msg14");
  }
  public void stop() {
    new S71();
    new S61();
  }
  void pause() {
    send("msg12");
    if (x9 > 0) {
      if (x0 > 0) {
        send("msg17");
        new S60();
        new S4();
      } else {
        send("msg3");
        new S78();
      }
      send("msg11");
    } else {
      log("note");
    }
  }
}
