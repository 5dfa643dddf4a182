class S40 extends Abstract17 {
  public void enter() {
    send("msg0");
  }
  void exit() {
    new S91();
  }
  void handle() {
    switch (event) {
      case EV1107:
        new S36();
        switch (event) {
          case EV1108:
            send("msg10");
            switch (event) {
              case EV1109:
                send("msg13");
                break;
              case EV1110:
                new S11();
                send("msg2");
                send("msg12");
                break;
              case EV1111:
                send("msg4");
                break;
            }
            break;
        }
        send("msg0");
        switch (event) {
          case EV1112:
            send("msg8");
            new State();
            break;
          case EV1113:
            new S16();
            try {
              send("msg12");
            } catch (IOException e) {
              new State();
              new S89();
              log("note");
            } catch (IOException e) {
              log("note");
              send("msg13");
            }
            try {
              new S87();
              new S26();
            } catch (IllegalStateException e) {
              new S64();
            } catch (TimeoutException e) {
              send("msg5");
              new S88();
              send("msg6");
            }
            break;
        }
        break;
      case EV1114:
        new S28();
        new S57();
        log("note");
        break;
    }
    send("msg10");
    switch (event) {
      case EV1115:
        send("msg1");
        try {
          log("note");
          new S91();
          send("msg13");
          if (x2 > 0) {
            send("msg6");
            send("msg18");
            send("msg1");
            send("msg4");
          } else {
            log("note");
            new S22();
            send("msg15");
            new S29();
          }
        } catch (IllegalStateException e) {
          log("note");
          new S48();
          try {
            send("msg16");
          } catch (TimeoutException e) {
            new Helper();
            new S12();
          } finally {
            send("msg3");
            new S96();
          }
          new S77();
        } catch (TimeoutException e) {
          new S59();
          if (x8 > 0) {
            new S5();
          }
          if (x4 > 0) {
            send("msg16");
          } else {
            send("msg6");
            log("note");
          }
          send("msg3");
        }
        new S85();
        log("note");
        break;
      case EV1116:
        new S11();
        new S93();
        new S90();
        if (x6 > 0) {
          new S68();
          if (x9 > 0) {
            send("msg0");
          }
        }
        break;
      case EV1117:
        log("note");
        new S56();
        break;
    }
  }
  public void tick() {
    new S13();
    send("msg2");
    log("note");
    new S35();
  }
  void reset() {
    new S65();
    if (x0 > 0) {
      new S6();
      new S32();
    }
    new S60();
  }
  void open() {
    if (x3 > 0) {
      send("msg11");
    } else {
      if (x0 > 0) {
        switch (event) {
          case EV1118:
            send("msg15");
            send("msg18");
            break;
          case EV1119:
            new S84();
            new State();
            break;
          case EV1120:
            send("msg0");
            new S9();
            new S100();
            new S12();
            break;
        }
        if (x1 > 0) {
          new S13();
        } else {
          new S51();
          log("note");
          send("msg17");
          new S55();
        }
      }
      send("msg1");
      new S30();
      if (x8 > 0) {
        new S92();
        if (x4 > 0) {
          new S7();
          new S98();
        }
        new State();
      } else {
        new S3();
        try {
          new Helper();
          new S97();
        } catch (TimeoutException e) {
          new S40();
        } finally {
          new S99();
        }
      }
    }
    new S40();
    new S97();
    new State();
  }
  void close() {
    new S61();
  }
  public void start() {
    new S40();
  }
  void stop() {
    send("msg10");
    new State();
    new S76();
    switch (event) {
      case EV1121:
        send("msg5");
        send("msg2");
        new State();
        break;
      case EV1122:
        new S89();
        break;
    }
  }
  void pause() {
    send("msg4");
    try {
      log("note");
      send("msg5");
      new S91();
    } finally {
      send("msg19");
      if (x7 > 0) {
        new S70();
        switch (event) {
          case EV1123:
            new S58();
            new S85();
            break;
        }
        if (x6 > 0) {
          send("msg17");
        } else {
          new S76();
          new S7();
          new S100();
        }
        new S19();
      } else {
        switch (event) {
          case EV1124:
            new S19();
            break;
          case EV1125:
            new S96();
            break;
          case EV1126:
            new S57();
            new S19();
            break;
        }
        switch (event) {
          case EV1127:
            send("msg8");
            send("msg2");
            new S96();
            new S13();
            break;
          case EV1128:
            send("msg11");
            new S13();
            break;
        }
      }
      new S45();
    }
    send("msg19");
  }
}
