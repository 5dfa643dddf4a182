class S6 extends Abstract15 {
  void enter() {
    send("msg17");
    send("msg12");
    new S91();
    log("note");
  }
  void exit() {
    if (x8 > 0) {
      log("note");
      new S86();
      new S88();
      log("note");
    }
    try {
      switch (event) {
        case EV211:
          new S9();
          break;
        case EV212:
          try {
            send("msg7");
            log("note");
            new Helper();
          } catch (IOException e) {
            send("msg5");
          }
          switch (event) {
            case EV213:
              new S54();
              send("msg13");
              new S10();
              new S2();
              break;
          }
          new S11();
          send("msg13");
          break;
      }
      try {
        new S21();
        try {
          new S81();
        } finally {
          send("msg15");
        }
      } catch (TimeoutException e) {
        send("msg19");
        new S67();
        send("msg6");
      } finally {
        new S42();
        new S27();
        switch (event) {
          case EV214:
            send("msg14");
            break;
          case EV215:
            new S51();
            send("msg9");
            new S35();
            break;
        }
      }
      new S95();
      new Helper();
    } catch (IllegalStateException e) {
      send("msg12");
      send("msg3");
      log("note");
    }
  }
  public void handle() {
    new S20();
  }
  public void tick() {
    new Helper();
    new S30();
    if (x9 > 0) {
      new S12();
      new S19();
      switch (event) {
        case EV216:
          send("msg11");
          new S15();
          break;
      }
      new S86();
    } else {
      send("msg15");
    }
    new S70();
  }
  void reset() {
    switch (event) {
      case EV217:
        try {
          if (x3 > 0) {
            send("msg8");
            send("msg19");
            send("msg7");
            new S69();
          } else {
            new S2();
            new State();
          }
          send("msg18");
          send("msg11");
          new S49();
        } catch (TimeoutException e) {
          log("note");
        } finally {
          if (x3 > 0) {
            new S79();
            send("msg10");
            send("msg13");
          } else {
            send("msg15");
            new S12();
          }
          new S90();
          new S97();
          switch (event) {
            case EV218:
              new S39();
              new S50();
              break;
          }
        }
        try {
          switch (event) {
            case EV219:
              new S8();
              log("note");
              new S90();
              send("msg14");
              break;
            case EV220:
              send("msg16");
              break;
            case EV221:
              new S95();
              new S96();
              new S96();
              new S8();
              break;
          }
        } catch (IllegalStateException e) {
          switch (event) {
            case EV222:
              send("msg4");
              new S16();
              new S25();
              new S92();
              break;
            case EV223:
              new S91();
              break;
            case EV224:
              new S22();
              new S7();
              new S6();
              send("msg19");
              break;
          }
          send("msg10");
        }
        new S15();
        break;
      case EV225:
        new S72();
        new S17();
        new Helper();
        break;
    }
  }
  void open() {
    send("msg10");
    send("msg15");
    send("msg3");
    new S34();
  }
  void close() {
    new S53();
  }
  public void start() {
    new S93();
  }
  void stop() {
    switch (event) {
      case EV226:
        send("msg15");
        new State();
        break;
      case EV227:
        if (x9 > 0) {
          try {
            send("msg1");
          } finally {
            new S6();
            new S30();
            send("msg5");
            new S83();
          }
        } else {
          new S8();
          new S98();
        }
        try {
          new S7();
          send("msg4");
        } catch (TimeoutException e) {
          send("msg4");
        }
        try {
          new S86();
          new S17();
        } finally {
          switch (event) {
            case EV228:
              send("msg2");
              new S51();
              break;
          }
          log("note");
        }
        break;
      case EV229:
        log("note");
        break;
    }
    switch (event) {
      case EV230:
        if (x1 > 0) {
          new S93();
          switch (event) {
            case EV231:
              new State();
              send("msg4");
              new S56();
              break;
            case EV232:
              log("note");
              break;
            case EV233:
              new S32();
              new Helper();
              send("msg3");
              break;
          }
          new S100();
          send("msg2");
        }
        send("msg9");
        break;
    }
    if (x3 > 0) {
      send("msg15");
      switch (event) {
        case EV234:
          try {
            log("note");
            log("note");
            new S16();
            log("note");
          } catch (IllegalStateException e) {
            new S76();
            send("msg13");
          } catch (IOException e) {
            send("msg2");
            send("msg12");
            send("msg0");
            new S13();
          }
          new S34();
          switch (event) {
            case EV235:
              new S72();
              new S12();
              log("note");
              new S44();
              break;
            case EV236:
              new S13();
              break;
            case EV237:
              new Helper();
              send("msg6");
              new S12();
              send("msg11");
              break;
          }
          send("msg5");
          break;
        case EV238:
          send("msg4");
          new S67();
          break;
      }
      new S98();
      if (x5 > 0) {
        if (x2 > 0) {
          log("note");
        } else {
          new S10();
          new S88();
          new S34();
        }
        log("note");
      } else {
        log("note");
        log("note");
        try {
          new S78();
          send("msg15");
          new S10();
        } catch (IOException e) {
          new S55();
          send("msg1");
          log("note");
          new S80();
        } catch (IOException e) {
          new S39();
          send("msg6");
          new S24();
          log("note");
        }
        new S27();
      }
    }
  }
  void pause() {
    new S37();
    new S4();
  }
}
