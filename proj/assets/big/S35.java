class S35 extends Abstract7 {
  void enter() {
    new S67();
    log("note");
  }
  void exit() {
    send("msg16");
    send("msg3");
    new S82();
    new S23();
  }
  void handle() {
    new Helper();
    send("msg9");
    send("msg2");
  }
  void tick() {
    switch (event) {
      case EV985:
        new S67();
        new S19();
        new S21();
        break;
    }
    switch (event) {
      case EV986:
        try {
          switch (event) {
            case EV987:
              new S15();
              log("note");
              new S96();
              send("msg13");
              break;
          }
          new S32();
          new Helper();
        } catch (TimeoutException e) {
          new S11();
          new S28();
        } catch (TimeoutException e) {
          send("msg10");
        }
        switch (event) {
          case EV988:
            switch (event) {
              case EV989:
                send("msg6");
                log("note");
                new S4();
                break;
            }
            send("msg17");
            log("note");
            if (x6 > 0) {
              send("msg6");
            } else {
              new S50();
              new S12();
              send("msg16");
              new S100();
            }
            break;
          case EV990:
            try {
              new S83();
              new S65();
              new S45();
              send("msg13");
            } catch (TimeoutException e) {
              new Helper();
              send("msg17");
              send("msg5");
            } finally {
              send("msg16");
            }
            switch (event) {
              case EV991:
                new State();
                new S96();
                log("note");
                send("msg0");
                break;
              case EV992:
                new S2();
                new S44();
                break;
              case EV993:
                send("msg11");
                new S92();
                break;
            }
            new S20();
            new Helper();
            break;
          case EV994:
            switch (event) {
              case EV995:
                send("msg6");
                new S46();
                new S32();
                break;
              case EV996:
                new S94();
                send("msg15");
                log("note");
                new S45();
                break;
            }
            send("msg14");
            break;
        }
        send("msg15");
        break;
    }
  }
  void reset() {
    log("note");
  }
  void open() {
    if (x9 > 0) {
      new S57();
      if (x7 > 0) {
        try {
          new S69();
          send("msg12");
        } catch (TimeoutException e) {
          send("msg19");
        } finally {
          new S48();
          new S82();
          new S12();
        }
        new S10();
        new Helper();
      }
      switch (event) {
        case EV997:
          switch (event) {
            case EV998:
              log("note");
              send("msg12");
              new S69();
              break;
          }
          send("msg11");
          break;
        case EV999:
          new S24();
          new S35();
          break;
        case EV1000:
          new S38();
          if (x7 > 0) {
            new S11();
            new State();
            send("msg8");
            send("msg17");
          }
          new S12();
          log("note");
          break;
      }
    }
    if (x2 > 0) {
      send("msg15");
      send("msg12");
      new S24();
      send("msg2");
    } else {
      new S80();
    }
  }
  void close() {
    new S53();
    send("msg3");
    send("msg18");
  }
  void start() {
    new State();
    new Helper();
  }
  void stop() {
    new S33();
    try {
      if (x9 > 0) {
        try {
          log("note");
          new S91();
        } catch (IOException e) {
          send("msg5");
          log("note");
          send("msg9");
        }
        new State();
        if (x0 > 0) {
          send("msg16");
          new S44();
          new S60();
        }
      } else {
        switch (event) {
          case EV1001:
            new S9();
            new S2();
            new S63();
            break;
          case EV1002:
            new S97();
            send("msg10");
            new State();
            new S54();
            break;
          case EV1003:
            send("msg16");
            new S5();
            send("msg3");
            new S1();
            break;
        }
        send("msg18");
        new S3();
      }
      new S38();
    } catch (IllegalStateException e) {
      new S13();
      new S17();
    } finally {
      new S61();
      switch (event) {
        case EV1004:
          new S60();
          break;
        case EV1005:
          if (x9 > 0) {
            new Helper();
          } else {
            log("note");
          }
          break;
      }
    }
  }
  public void pause() {
    send("msg2");
    new Helper();
  }
}
