class S39 extends Abstract9 {
  public void enter() {
    send("msg16");
  }
  public void exit() {
    if (x0 > 0) {
      new S80();
    }
    send("msg2");
    new S69();
  }
  public void handle() {
    new S4();
  }
  void tick() {
    new S46();
    new S78();
    new S49();
  }
  public void reset() {
    new S58();
    new S77();
    log("note");
    new State();
  }
  public void open() {
    try {
      new S68();
      log("note");
      new S51();
      switch (event) {
        case EV1081:
          new S84();
          break;
        case EV1082:
          switch (event) {
            case EV1083:
              send("msg7");
              new S72();
              send("msg12");
              new S100();
              break;
            case EV1084:
              send("msg14");
              send("msg1");
              send("msg1");
              break;
          }
          break;
      }
    } catch (IllegalStateException e) {
      new S1();
      new S52();
    } catch (TimeoutException e) {
      new S2();
    }
    try {
      switch (event) {
        case EV1085:
          new S100();
          new S21();
          new S60();
          break;
        case EV1086:
          try {
            new S96();
            send("msg8");
            send("msg0");
          } catch (IllegalStateException e) {
            new S37();
          } finally {
            new S19();
            new S14();
          }
          log("note");
          if (x2 > 0) {
            new S13();
            send("msg6");
          }
          break;
        case EV1087:
          new S18();
          send("msg8");
          try {
            send("msg15");
            new S39();
            new S66();
            new S77();
          } catch (IOException e) {
            log("note");
            new S61();
          }
          if (x8 > 0) {
            new S81();
            new S96();
          }
          break;
      }
    } catch (IllegalStateException e) {
      new S94();
      try {
        switch (event) {
          case EV1088:
            new S96();
            new S67();
            break;
          case EV1089:
            new S77();
            break;
          case EV1090:
            new S53();
            new S97();
            new S95();
            send("msg6");
            break;
        }
      } catch (IllegalStateException e) {
        try {
          new S37();
          send("msg7");
          new S64();
          send("msg8");
        } finally {
          new S49();
          send("msg5");
          send("msg0");
        }
        new S70();
      } catch (IllegalStateException e) {
        if (x9 > 0) {
          new S15();
          new S4();
        } else {
          send("msg3");
          log("note");
          send("msg3");
          send("msg3");
        }
      }
    } finally {
      new S1();
      new S20();
      if (x9 > 0) {
        if (x6 > 0) {
          send("msg9");
          send("msg12");
        }
        try {
          new S7();
          log("note");
          new S18();
        } catch (IllegalStateException e) {
          new S58();
          send("msg9");
          send("msg17");
        } finally {
          send("msg9");
          send("msg7");
          send("msg14");
          new S64();
        }
        new Helper();
      } else {
        send("msg1");
      }
      new S34();
    }
    new S7();
    new S24();
  }
  void close() {
    new S13();
  }
  public void start() {
    if (x7 > 0) {
      new S28();
      if (x7 > 0) {
        send("msg7");
        new S43();
      } else {
        new S41();
        new State();
      }
      if (x8 > 0) {
        send("msg17");
        send("msg11");
      } else {
        new S89();
        new S67();
        new S1();
        send("msg10");
      }
      new S51();
    } else {
      try {
        new S40();
        switch (event) {
          case EV1091:
            new S10();
            send("msg12");
            new S46();
            break;
        }
        new S76();
      } catch (TimeoutException e) {
        new S98();
        new S88();
        send("msg4");
        switch (event) {
          case EV1092:
            send("msg13");
            send("msg5");
            send("msg1");
            break;
          case EV1093:
            new State();
            send("msg1");
            new S55();
            send("msg18");
            break;
          case EV1094:
            log("note");
            log("note");
            new S89();
            send("msg15");
            break;
        }
      } catch (IllegalStateException e) {
        new S70();
        log("note");
      }
      new S50();
      send("msg15");
      new S18();
    }
  }
  public void stop() {
    new S65();
    switch (event) {
      case EV1095:
        switch (event) {
          case EV1096:
            new S77();
            break;
        }
        send("msg15");
        break;
    }
    new S52();
  }
  void pause() {
    new S39();
    if (x8 > 0) {
      new S41();
    }
    switch (event) {
      case EV1097:
        if (x3 > 0) {
          send("msg15");
        }
        switch (event) {
          case EV1098:
            new S22();
            new S80();
            break;
          case EV1099:
            send("msg12");
            new S4();
            switch (event) {
              case EV1100:
                new S90();
                break;
            }
            new S80();
            break;
          case EV1101:
            new S51();
            new S22();
            switch (event) {
              case EV1102:
                send("msg18");
                new S77();
                send("msg0");
                break;
              case EV1103:
                send("msg2");
                new S99();
                new S56();
                break;
              case EV1104:
                new S41();
                new S27();
                break;
            }
            if (x7 > 0) {
              new S82();
              send("msg14");
              log("note");
            } else {
              send("msg17");
              send("msg7");
              new S28();
            }
            break;
        }
        new S100();
        break;
      case EV1105:
        new S13();
        new S67();
        new S30();
        break;
      case EV1106:
        if (x1 > 0) {
          send("msg13");
          try {
            send("msg2");
            send("msg7");
            new S30();
          } catch (IOException e) {
            send("msg7");
            new S65();
          }
          send("msg9");
        } else {
          new S97();
          new S24();
          try {
            new S99();
            log("note");
            send("msg14");
            new S76();
          } catch (TimeoutException e) {
            new S50();
            send("msg1");
            send("msg0");
          }
          try {
            new S8();
          } catch (TimeoutException e) {
            new S76();
            log("note");
          }
        }
        new S38();
        new S29();
        new S30();
        break;
    }
    new S50();
  }
}
