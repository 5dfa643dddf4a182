class S38 extends Abstract18 {
  public void enter() {
    if (x7 > 0) {
      new S60();
      try {
        new S34();
        try {
          send("msg4");
          send("msg2");
          send("msg12");
          new S77();
        } catch (TimeoutException e) {
          new S23();
        } finally {
          send("msg0");
          new S78();
        }
      } catch (TimeoutException e) {
        new S5();
      }
      switch (event) {
        case EV1065:
          new S67();
          new S65();
          try {
            send("msg12");
            log("note");
            send("msg17");
            new S94();
          } finally {
            log("note");
          }
          try {
            new S28();
          } finally {
            new S91();
          }
          break;
        case EV1066:
          switch (event) {
            case EV1067:
              log("note");
              break;
            case EV1068:
              new Helper();
              send("msg16");
              new S6();
              break;
          }
          send("msg2");
          break;
        case EV1069:
          send("msg9");
          break;
      }
      log("note");
    }
    send("msg15");
    new S9();
  }
  void exit() {
    new S68();
  }
  void handle() {
    new Helper();
    new S76();
    switch (event) {
      case EV1070:
        send("msg8");
        new S81();
        send("msg19");
        break;
    }
  }
  void tick() {
    new S92();
  }
  public void reset() {
    send("msg18");
  }
  void open() {
    new S5();
    if (x0 > 0) {
      if (x3 > 0) {
        if (x9 > 0) {
          send("msg11");
          new S63();
          new S93();
          new S2();
        } else {
          send("msg3");
          send("msg6");
        }
        switch (event) {
          case EV1071:
            send("msg15");
            send("msg15");
            new S9();
            new S33();
            break;
        }
        if (x1 > 0) {
          new S27();
          new S73();
        } else {
          new S85();
          new Helper();
          log("note");
        }
      } else {
        if (x0 > 0) {
          send("msg8");
        }
        send("msg1");
        new State();
      }
      try {
        if (x5 > 0) {
          new S8();
          new S12();
        } else {
          new S53();
          send("msg14");
        }
      } catch (IOException e) {
        if (x2 > 0) {
          send("msg11");
          send("msg14");
          new Helper();
        } else {
          new State();
          send("msg0");
        }
        switch (event) {
          case EV1072:
            send("msg12");
            new S57();
            new Helper();
            break;
        }
      }
      new S6();
      try {
        send("msg4");
        send("msg18");
      } catch (IllegalStateException e) {
        log("note");
      }
    }
  }
  public void close() {
    new S59();
    switch (event) {
      case EV1073:
        new S8();
        try {
          if (x6 > 0) {
            send("msg19");
          } else {
            log("note");
          }
          switch (event) {
            case EV1074:
              send("msg5");
              new S96();
              new S76();
              break;
            case EV1075:
              new State();
              new S33();
              new S19();
              break;
            case EV1076:
              new S59();
              new S61();
              break;
          }
          if (x2 > 0) {
            new S21();
            new S11();
            send("msg5");
            new S6();
          } else {
            new S28();
            send("msg16");
          }
          new S84();
        } finally {
          new S34();
          if (x6 > 0) {
            send("msg15");
            send("msg3");
            new S64();
          }
          try {
            send("msg9");
            new State();
            new Helper();
          } catch (IOException e) {
            new S34();
            new S51();
          } catch (IllegalStateException e) {
            new Helper();
            send("msg4");
            send("msg9");
          }
        }
        new S52();
        break;
    }
  }
  void start() {
    send("msg18");
    try {
      try {
        send("msg2");
        try {
          log("note");
          new State();
          send("msg12");
        } catch (TimeoutException e) {
          new State();
          log("note");
          new State();
          send("msg3");
        }
        try {
          send("msg6");
          send("msg4");
          send("msg8");
        } catch (IllegalStateException e) {
          new S29();
          new S93();
          send("msg4");
        } catch (IOException e) {
          log("note");
          send("msg2");
          new S15();
        }
        send("msg11");
      } catch (TimeoutException e) {
        new S74();
        new S16();
      }
    } catch (TimeoutException e) {
      send("msg18");
    } finally {
      new S22();
      if (x1 > 0) {
        try {
          send("msg9");
          send("msg15");
          send("msg15");
          new S98();
        } catch (IOException e) {
          send("msg0");
          send("msg10");
          new S83();
        } catch (IllegalStateException e) {
          send("msg5");
          send("msg6");
        }
        new S95();
        new S55();
        new S55();
      } else {
        send("msg17");
        try {
          new S15();
        } finally {
          send("msg13");
          send("msg6");
        }
      }
    }
  }
  public void stop() {
    new S17();
  }
  void pause() {
    new S56();
    switch (event) {
      case EV1077:
        if (x7 > 0) {
          try {
            send("msg2");
            new S70();
          } catch (IOException e) {
            send("msg3");
          } catch (IOException e) {
            new S8();
            new S86();
            send("msg13");
            log("note");
          }
          new S21();
          send("msg6");
          switch (event) {
            case EV1078:
              new S49();
              new Helper();
              send("msg17");
              break;
            case EV1079:
              new S79();
              send("msg1");
              new S15();
              break;
            case EV1080:
              send("msg17");
              break;
          }
        }
        send("msg11");
        try {
          new S9();
        } catch (TimeoutException e) {
          send("msg3");
          new S56();
          new S43();
        }
        break;
    }
  }
}
