class S98 extends Abstract15 {
  void enter() {
    switch (event) {
      case EV3047:
        new S93();
        new State();
        send("msg1");
        if (x3 > 0) {
          switch (event) {
            case EV3048:
              send("msg11");
              break;
          }
          new S25();
          try {
            send("msg14");
            new State();
            new S65();
            new S63();
          } catch (IllegalStateException e) {
            new S34();
          } catch (IOException e) {
            new S54();
          }
          try {
            new S25();
            new S49();
            new S33();
            new S19();
          } catch (IllegalStateException e) {
            new S24();
            send("msg1");
          } catch (TimeoutException e) {
            send("msg11");
            new S16();
            new State();
          }
        }
        break;
      case EV3049:
        switch (event) {
          case EV3050:
            if (x4 > 0) {
              send("msg13");
              new State();
            }
            if (x1 > 0) {
              send("msg1");
              new S82();
            } else {
              send("msg3");
            }
            if (x8 > 0) {
              new S26();
            } else {
              send("msg6");
            }
            new State();
            break;
          case EV3051:
            new S36();
            new S65();
            if (x5 > 0) {
              new S47();
              send("msg3");
              new S81();
            } else {
              send("msg15");
            }
            break;
        }
        new S53();
        new S94();
        break;
      case EV3052:
        switch (event) {
          case EV3053:
            new S19();
            switch (event) {
              case EV3054:
                send("msg14");
                send("msg0");
                break;
              case EV3055:
                new State();
                new S4();
                break;
              case EV3056:
                log("note");
                new S68();
                break;
            }
            break;
          case EV3057:
            if (x0 > 0) {
              send("msg19");
              new S64();
            }
            if (x6 > 0) {
              new Helper();
              new State();
            } else {
              new S85();
              log("note");
            }
            send("msg7");
            break;
          case EV3058:
            send("msg11");
            new S44();
            break;
        }
        log("note");
        try {
          if (x3 > 0) {
            log("note");
            new S98();
            log("note");
          } else {
            new S100();
          }
          new S81();
          switch (event) {
            case EV3059:
              send("msg18");
              new S17();
              send("msg6");
              break;
            case EV3060:
              new S24();
              break;
            case EV3061:
              send("msg19");
              send("msg10");
              break;
          }
        } finally {
          send("msg13");
        }
        break;
    }
  }
  public void exit() {
    if (x0 > 0) {
      try {
        new S54();
        send("msg13");
      } catch (IllegalStateException e) {
        log("note");
      }
      switch (event) {
        case EV3062:
          switch (event) {
            case EV3063:
              log("note");
              new S12();
              new State();
              new S25();
              break;
          }
          new State();
          break;
        case EV3064:
          switch (event) {
            case EV3065:
              new S81();
              new State();
              send("msg18");
              break;
          }
          try {
            send("msg17");
            log("note");
            new S50();
            send("msg18");
          } catch (TimeoutException e) {
            send("msg3");
            new S3();
            send("msg15");
            send("msg16");
          } finally {
            new State();
            new S73();
          }
          new S77();
          send("msg12");
          break;
        case EV3066:
          switch (event) {
            case EV3067:
              new S9();
              break;
            case EV3068:
              send("msg19");
              break;
          }
          log("note");
          new S80();
          new S72();
          break;
      }
      new S88();
    } else {
      new S60();
      log("note");
      if (x6 > 0) {
        if (x9 > 0) {
          send("msg8");
        }
        send("msg15");
        log("note");
        new S60();
      } else {
        new S78();
      }
    }
  }
  public void handle() {
    new S95();
    switch (event) {
      case EV3069:
        new S13();
        try {
          switch (event) {
            case EV3070:
              new S32();
              new S45();
              log("note");
              break;
          }
        } finally {
          send("msg13");
          log("note");
          send("msg5");
        }
        break;
    }
    new S77();
    new S45();
  }
  void tick() {
    if (x2 > 0) {
      log("note");
      try {
        try {
          new State();
          log("note");
          new S29();
        } catch (TimeoutException e) {
          new S5();
          send("msg10");
          new State();
        } finally {
          send("msg19");
          new S21();
          send("msg13");
          new S100();
        }
        send("msg9");
        new S16();
      } catch (IllegalStateException e) {
        log("note");
        new S92();
        new Helper();
        new S86();
      }
      send("msg12");
      if (x5 > 0) {
        new S93();
        new S74();
      }
    }
  }
  void reset() {
    new S35();
  }
  void open() {
    log("note");
    new S57();
    log("note");
  }
  public void close() {
    try {
      log("note");
    } catch (IllegalStateException e) {
      if (x9 > 0) {
        try {
          new S89();
          log("note");
        } catch (IllegalStateException e) {
          new S44();
          send("msg14");
          new S99();
          new S9();
        } finally {
          send("msg13");
        }
      } else {
        switch (event) {
          case EV3071:
            new S92();
            send("msg7");
            new S22();
            break;
          case EV3072:
            new S75();
            new S28();
            break;
          case EV3073:
            new S68();
            break;
        }
        try {
          send("msg10");
          new S92();
          new S77();
        } catch (IOException e) {
          log("note");
          new S10();
          new S53();
          send("msg18");
        } catch (TimeoutException e) {
          new S68();
          new Helper();
          new S6();
          log("note");
        }
        new S53();
        switch (event) {
          case EV3074:
            new Helper();
            send("msg1");
            send("msg2");
            break;
        }
      }
      send("msg19");
      send("msg11");
    } catch (TimeoutException e) {
      log("note");
      new S76();
      switch (event) {
        case EV3075:
          switch (event) {
            case EV3076:
              log("note");
              new Helper();
              break;
            case EV3077:
              new S42();
              new S12();
              send("msg19");
              break;
            case EV3078:
              send("msg9");
              send("msg8");
              send("msg5");
              log("note");
              break;
          }
          switch (event) {
            case EV3079:
              send("msg18");
              break;
          }
          break;
        case EV3080:
          send("msg2");
          try {
            new S25();
            send("msg4");
            new S8();
            send("msg10");
          } catch (TimeoutException e) {
            send("msg19");
            new S2();
            send("msg13");
            new S88();
          }
          break;
      }
    }
    new S97();
  }
  public void start() {
    new State();
  }
  void stop() {
    send("msg18");
    log("note");
    switch (event) {
      case EV3081:
        send("msg19");
        if (x4 > 0) {
          if (x2 > 0) {
            new Helper();
            send("msg10");
            new S79();
          } else {
            new S18();
            new S34();
            new S92();
          }
        } else {
          if (x5 > 0) {
            send("msg8");
          } else {
            new S97();
            send("msg10");
            log("note");
          }
          if (x1 > 0) {
            new S95();
            send("msg9");
            new S24();
          } else {
            send("msg16");
            new S87();
          }
          new S10();
          new S12();
        }
        break;
      case EV3082:
        new S99();
        break;
      case EV3083:
        new S78();
        send("msg3");
        break;
    }
  }
  void pause() {
    send("msg14");
    switch (event) {
      case EV3084:
        new S71();
        send("msg1");
        send("msg18");
        new S25();
        break;
    }
  }
}
