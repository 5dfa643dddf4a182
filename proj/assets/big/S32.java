class S32 extends Abstract15 {
  void enter() {
    new S59();
    if (x7 > 0) {
      new S26();
      try {
        new State();
        new S5();
        new S18();
      } catch (TimeoutException e) {
        send("msg5");
        new S36();
      } finally {
        send("msg11");
      }
    }
    new S24();
  }
  void exit() {
    new S95();
    if (x8 > 0) {
      new Helper();
    }
  }
  void handle() {
    send("msg7");
  }
  void tick() {
    new S50();
    send("msg8");
    new S56();
    send("msg17");
  }
  void reset() {
    if (x1 > 0) {
      send("msg4");
      send("msg11");
      new S32();
      log("note");
    } else {
      try {
        log("note");
        new S11();
        new S94();
      } catch (IOException e) {
        send("msg5");
      } catch (IllegalStateException e) {
        try {
          new S45();
          send("msg17");
          new S22();
          send("msg14");
        } catch (IllegalStateException e) {
          new S2();
          send("msg10");
          new Helper();
        }
        new S98();
      }
      send("msg9");
      if (x4 > 0) {
        new S61();
        log("note");
        send("msg14");
        new S30();
      }
    }
    new S84();
    new S45();
  }
  void open() {
    log("note");
    new S94();
  }
  void close() {
    new S50();
    try {
      send("msg9");
      if (x2 > 0) {
        new S28();
        send("msg18");
      } else {
        log("note");
        new S61();
      }
    } catch (IllegalStateException e) {
      try {
        new S13();
        new State();
        log("note");
      } finally {
        send("msg10");
        if (x8 > 0) {
          new S72();
          new S38();
          new S57();
          new S83();
        } else {
          send("msg7");
          send("msg8");
          new S58();
          send("msg2");
        }
      }
      send("msg14");
      switch (event) {
        case EV905:
          send("msg19");
          break;
      }
    } catch (TimeoutException e) {
      try {
        new S13();
        if (x9 > 0) {
          new S5();
        }
        switch (event) {
          case EV906:
            send("msg6");
            new S19();
            log("note");
            new State();
            break;
          case EV907:
            new S64();
            new S89();
            send("msg19");
            break;
        }
      } catch (IOException e) {
        try {
          new S100();
          send("msg0");
          log("note");
          new S4();
        } catch (IllegalStateException e) {
          send("msg4");
          new S48();
          log("note");
        }
        switch (event) {
          case EV908:
            send("msg6");
            send("msg12");
            break;
        }
        log("note");
      } finally {
        switch (event) {
          case EV909:
            log("note");
            break;
          case EV910:
            new S54();
            break;
          case EV911:
            send("msg14");
            send("msg5");
            send("msg18");
            break;
        }
        new S30();
        try {
          new S33();
        } finally {
          new S84();
        }
      }
    }
    if (x2 > 0) {
      new S80();
      log("note");
      new S44();
    }
    new S67();
  }
  void start() {
    switch (event) {
      case EV912:
        new S14();
        try {
          new S83();
          new S41();
          send("msg4");
        } catch (TimeoutException e) {
          log("note");
        } finally {
          new S22();
          try {
            new S96();
            new S43();
            new S22();
          } catch (IOException e) {
            send("msg17");
            send("msg4");
            new S88();
          } catch (TimeoutException e) {
            send("msg19");
            new S17();
            new S97();
          }
          try {
            send("msg11");
            send("msg13");
          } catch (IOException e) {
            new S45();
            send("msg7");
          } finally {
            log("note");
            send("msg12");
            new S10();
            new S70();
          }
          switch (event) {
            case EV913:
              new S16();
              new S28();
              send("msg2");
              new S35();
              break;
            case EV914:
              send("msg11");
              break;
            case EV915:
              new S68();
              new S89();
              new S36();
              log("note");
              break;
          }
        }
        send("msg15");
        new S48();
        break;
    }
    send("msg17");
    new S6();
    try {
      log("note");
    } catch (IOException e) {
      new S16();
      switch (event) {
        case EV916:
          if (x9 > 0) {
            new S47();
            send("msg2");
            new S9();
          }
          break;
      }
    } catch (IOException e) {
      new Helper();
      send("msg18");
    }
  }
  void stop() {
    new S62();
    send("msg17");
    if (x7 > 0) {
      switch (event) {
        case EV917:
          send("msg14");
          try {
            new S14();
            new S5();
            send("msg16");
            send("msg15");
          } finally {
            send("msg8");
            new S87();
          }
          send("msg10");
          break;
      }
    }
    new S78();
  }
  public void pause() {
    new S50();
    if (x1 > 0) {
      try {
        send("msg12");
        if (x5 > 0) {
          new S96();
        }
        new S76();
      } catch (IOException e) {
        new Helper();
        try {
          new S39();
          log("note");
          log("note");
          new S66();
        } catch (IOException e) {
          new S18();
          new S100();
          send("msg6");
        }
        new S50();
      } finally {
        switch (event) {
          case EV918:
            send("msg6");
            send("msg5");
            break;
          case EV919:
            new S99();
            break;
        }
        new S58();
        send("msg9");
        new State();
      }
      send("msg14");
    } else {
      try {
        if (x1 > 0) {
          send("msg18");
        } else {
          new S67();
          new S35();
          log("note");
        }
        send("msg1");
        new Helper();
      } catch (IllegalStateException e) {
        if (x3 > 0) {
          send("msg2");
          new Helper();
          log("note");
          new S65();
        } else {
          send("msg17");
        }
        try {
          new S64();
          send("msg6");
        } catch (IOException e) {
          new S60();
          new S60();
          log("note");
          send("msg3");
        }
      } finally {
        send("msg8");
        log("note");
        if (x6 > 0) {
          send("msg14");
          new S17();
          new S27();
          send("msg4");
        } else {
          send("msg2");
          new S22();
        }
      }
      new S57();
    }
  }
}
