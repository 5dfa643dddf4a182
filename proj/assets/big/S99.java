class S99 extends Abstract16 {
  void enter() {
    send("msg12");
    send("msg19");
  }
  void exit() {
    send("msg5");
  }
  void handle() {
    try {
      new S60();
      send("msg7");
    } finally {
      log("note");
    }
    log("note");
    send("msg9");
    switch (event) {
      case EV3085:
        send("msg14");
        send("msg4");
        try {
          new S55();
          send("msg4");
          send("msg15");
        } catch (IllegalStateException e) {
          send("msg3");
          new S28();
          if (x5 > 0) {
            log("note");
          }
        } finally {
          log("note");
        }
        break;
    }
  }
  void tick() {
    new S18();
    new S81();
    switch (event) {
      case EV3086:
        new S39();
        new S29();
        new S57();
        send("msg7");
        break;
    }
    if (x7 > 0) {
      try {
        try {
          new S49();
        } catch (IllegalStateException e) {
          log("note");
          send("msg2");
        }
      } catch (IllegalStateException e) {
        new S23();
        switch (event) {
          case EV3087:
            log("note");
            new S95();
            send("msg5");
            send("msg5");
            break;
        }
        send("msg8");
      } catch (IOException e) {
        new S39();
        try {
          new S64();
        } finally {
          new State();
          new S48();
          new S32();
          send("msg2");
        }
      }
      new S7();
      new S60();
      new S22();
    }
  }
  void reset() {
    new S14();
    log("note");
    log("note");
    log("note");
  }
  void open() {
    send("msg9");
    try {
      try {
        new S40();
        new S91();
      } catch (TimeoutException e) {
        new State();
      } finally {
        new S17();
        new S16();
        switch (event) {
          case EV3088:
            log("note");
            send("msg18");
            break;
          case EV3089:
            send("msg19");
            break;
        }
      }
      new S45();
    } catch (IllegalStateException e) {
      log("note");
      new S94();
      try {
        send("msg11");
        try {
          log("note");
          new S27();
        } catch (IllegalStateException e) {
          send("msg18");
          new S73();
          new S2();
          new S88();
        } catch (TimeoutException e) {
          new State();
          new S69();
        }
        switch (event) {
          case EV3090:
            send("msg5");
            log("note");
            send("msg19");
            send("msg0");
            break;
        }
        new S89();
      } catch (TimeoutException e) {
        new S68();
        switch (event) {
          case EV3091:
            log("note");
            send("msg18");
            break;
        }
        new S74();
      } finally {
        send("msg6");
        if (x5 > 0) {
          send("msg12");
        } else {
          new S16();
          new S25();
        }
        log("note");
      }
    } finally {
      send("msg19");
      new S39();
    }
    switch (event) {
      case EV3092:
        switch (event) {
          case EV3093:
            new S26();
            break;
        }
        new S82();
        if (x5 > 0) {
          try {
            log("note");
            log("note");
            send("msg18");
            new S86();
          } catch (TimeoutException e) {
            send("msg8");
            new S65();
            new Helper();
          } catch (IllegalStateException e) {
            new S68();
            new S83();
            send("msg3");
            new S89();
          }
          send("msg15");
        } else {
          send("msg3");
          new S82();
          send("msg13");
        }
        break;
      case EV3094:
        switch (event) {
          case EV3095:
            try {
              log("note");
              new S58();
              new S98();
              new S77();
            } catch (IOException e) {
              new S54();
              new S26();
              log("note");
            } catch (IllegalStateException e) {
              new S16();
            }
            new S35();
            new S22();
            break;
        }
        switch (event) {
          case EV3096:
            new S17();
            switch (event) {
              case EV3097:
                new S88();
                new S96();
                log("note");
                send("msg18");
                break;
              case EV3098:
                new S67();
                log("note");
                new S62();
                new S48();
                break;
              case EV3099:
                new S85();
                new S63();
                break;
            }
            switch (event) {
              case EV3100:
                send("msg10");
                break;
              case EV3101:
                log("note");
                break;
              case EV3102:
                new S88();
                send("msg4");
                break;
            }
            send("msg7");
            break;
          case EV3103:
            try {
              send("msg9");
              send("msg14");
              new S90();
              new S61();
            } catch (TimeoutException e) {
              new S19();
              send("msg0");
              log("note");
            }
            break;
        }
        send("msg17");
        if (x2 > 0) {
          log("note");
          switch (event) {
            case EV3104:
              new S63();
              send("msg12");
              log("note");
              new S49();
              break;
            case EV3105:
              send("msg19");
              log("note");
              send("msg8");
              break;
          }
          try {
            log("note");
          } catch (IOException e) {
            send("msg4");
            new S20();
          } catch (IllegalStateException e) {
            send("msg0");
          }
          new S4();
        } else {
          switch (event) {
            case EV3106:
              send("msg18");
              send("msg9");
              send("msg19");
              break;
            case EV3107:
              new S34();
              new State();
              new S62();
              log("note");
              break;
          }
          send("msg8");
          send("msg6");
          send("msg13");
        }
        break;
    }
  }
  public void close() {
    send("msg5");
    send("msg11");
    new S21();
  }
  public void start() {
    new S18();
  }
  void stop() {
    if (x0 > 0) {
      new S77();
      new S21();
      try {
        send("msg14");
        new S72();
        log("note");
      } catch (IllegalStateException e) {
        new S84();
      }
    }
    send("msg13");
  }
  void pause() {
    switch (event) {
      case EV3108:
        new S93();
        new S99();
        new S100();
        switch (event) {
          case EV3109:
            log("note");
            switch (event) {
              case EV3110:
                log("note");
                new S31();
                new S5();
                break;
              case EV3111:
                send("msg4");
                send("msg13");
                log("note");
                new S63();
                break;
            }
            break;
          case EV3112:
            try {
              new S64();
              new S41();
              new S86();
              send("msg14");
            } catch (IllegalStateException e) {
              log("note");
            } catch (IOException e) {
              new S28();
              new S51();
              send("msg7");
              send("msg0");
            }
            if (x6 > 0) {
              new Helper();
              log("note");
            }
            log("note");
            break;
          case EV3113:
            switch (event) {
              case EV3114:
                send("msg13");
                send("msg19");
                break;
              case EV3115:
                new S97();
                new S23();
                log("note");
                break;
              case EV3116:
                new S97();
                log("note");
                break;
            }
            switch (event) {
              case EV3117:
                send("msg12");
                new S77();
                log("note");
                break;
              case EV3118:
                new S31();
                break;
            }
            send("msg12");
            break;
        }
        break;
      case EV3119:
        if (x2 > 0) {
          send("msg19");
        } else {
          if (x4 > 0) {
            log("note");
            new S21();
          }
        }
        send("msg1");
        send("msg12");
        break;
    }
    send("msg10");
    if (x8 > 0) {
      send("msg10");
      send("msg2");
      send("msg5");
    } else {
      send("msg16");
      new S4();
    }
  }
}
