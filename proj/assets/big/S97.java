class S97 extends Abstract14 {
  public void enter() {
    new S32();
  }
  void exit() {
    new S57();
    send("msg0");
    send("msg15");
    try {
      new State();
      send("msg3");
    } finally {
      new S27();
      new S58();
    }
  }
  void handle() {
    new S43();
  }
  void tick() {
    switch (event) {
      case EV3006:
        try {
          new S87();
          try {
            new S6();
            new S26();
          } catch (TimeoutException e) {
            new S6();
            send("msg10");
          }
          send("msg18");
          new S7();
        } catch (IOException e) {
          new S26();
          try {
            new S2();
            send("msg14");
            new S84();
            send("msg8");
          } catch (IllegalStateException e) {
            send("msg13");
            new S41();
            new S57();
            new S57();
          } catch (IllegalStateException e) {
            new S100();
          }
          send("msg8");
          new S5();
        } catch (TimeoutException e) {
          new S71();
          try {
            send("msg19");
            send("msg12");
            send("msg9");
            new S21();
          } finally {
            send("msg6");
            new S11();
            send("msg0");
          }
          new S2();
        }
        new S63();
        new S100();
        try {
          new S100();
          log("note");
          send("msg6");
        } catch (TimeoutException e) {
          new S18();
          new S33();
        } finally {
          try {
            new S69();
            send("msg8");
          } catch (IllegalStateException e) {
            send("msg18");
            new S90();
          }
        }
        break;
      case EV3007:
        new S87();
        send("msg16");
        new S2();
        break;
    }
    new S50();
    new S50();
    send("msg17");
  }
  void reset() {
    new S13();
    new S26();
  }
  void open() {
    new S44();
    send("msg0");
    switch (event) {
      case EV3008:
        new S7();
        break;
    }
  }
  void close() {
    if (x7 > 0) {
      try {
        switch (event) {
          case EV3009:
            send("msg19");
            send("msg19");
            log("note");
            send("msg2");
            break;
          case EV3010:
            send("msg1");
            send("msg0");
            break;
          case EV3011:
            new Helper();
            log("note");
            new S93();
            break;
        }
        new S69();
        new S31();
      } catch (IOException e) {
        switch (event) {
          case EV3012:
            new S37();
            send("msg15");
            break;
          case EV3013:
            send("msg11");
            log("note");
            break;
          case EV3014:
            send("msg14");
            send("msg7");
            send("msg2");
            break;
        }
        switch (event) {
          case EV3015:
            send("msg2");
            send("msg17");
            break;
          case EV3016:
            new S97();
            new S39();
            send("msg2");
            send("msg18");
            break;
          case EV3017:
            new S94();
            log("note");
            break;
        }
      }
    }
    try {
      switch (event) {
        case EV3018:
          switch (event) {
            case EV3019:
              send("msg1");
              new S4();
              break;
            case EV3020:
              new S33();
              new S1();
              new S38();
              new S79();
              break;
          }
          new S32();
          break;
        case EV3021:
          if (x8 > 0) {
            send("msg16");
            log("note");
          } else {
            send("msg14");
            log("note");
            new S73();
          }
          send("msg15");
          break;
      }
    } catch (IOException e) {
      log("note");
      new S66();
    }
    new S85();
    new S23();
  }
  public void start() {
    switch (event) {
      case EV3022:
        send("msg19");
        new S28();
        switch (event) {
          case EV3023:
            new S76();
            new State();
            break;
          case EV3024:
            new S7();
            new S20();
            new S67();
            new S47();
            break;
          case EV3025:
            try {
              new S53();
              send("msg18");
              new S67();
              log("note");
            } catch (IOException e) {
              new S38();
            } finally {
              new S37();
              new S30();
            }
            send("msg0");
            new S69();
            break;
        }
        switch (event) {
          case EV3026:
            log("note");
            try {
              send("msg6");
            } catch (IllegalStateException e) {
              new S40();
            } finally {
              new S62();
              new S91();
              send("msg8");
              new S20();
            }
            break;
          case EV3027:
            new S86();
            send("msg18");
            break;
          case EV3028:
            send("msg18");
            try {
              new S97();
              new S38();
              send("msg9");
              new S99();
            } catch (IOException e) {
              new S91();
              send("msg4");
              new State();
            } catch (IOException e) {
              new S76();
              send("msg18");
              send("msg7");
            }
            new Helper();
            break;
        }
        break;
      case EV3029:
        new S75();
        if (x5 > 0) {
          try {
            new S18();
            send("msg16");
          } catch (IOException e) {
            log("note");
          }
          new S93();
        } else {
          if (x4 > 0) {
            new S89();
            send("msg19");
            new S99();
          }
          new S72();
        }
        send("msg1");
        log("note");
        break;
      case EV3030:
        new S48();
        switch (event) {
          case EV3031:
            send("msg8");
            try {
              new S63();
              new S11();
              new State();
            } finally {
              send("msg4");
            }
            log("note");
            break;
          case EV3032:
            switch (event) {
              case EV3033:
                new S54();
                break;
              case EV3034:
                new S63();
                new S11();
                send("msg14");
                new S98();
                break;
            }
            send("msg11");
            if (x8 > 0) {
              new S16();
              new S59();
              new S37();
            } else {
              send("msg18");
              new S49();
              new S31();
            }
            break;
        }
        send("msg1");
        break;
    }
    if (x8 > 0) {
      log("note");
      new S67();
      send("msg12");
    }
    send("msg10");
    send("msg12");
  }
  public void stop() {
    send("msg13");
    log("note");
    try {
      send("msg8");
      new S19();
      try {
        send("msg5");
        if (x4 > 0) {
          new S47();
        } else {
          new S86();
          send("msg12");
        }
        send("msg3");
      } catch (TimeoutException e) {
        switch (event) {
          case EV3035:
            log("note");
            send("msg0");
            send("msg18");
            break;
        }
        new Helper();
        switch (event) {
          case EV3036:
            new S98();
            new S11();
            break;
          case EV3037:
            new S25();
            send("msg5");
            break;
        }
      } finally {
        new S69();
        new S49();
        try {
          new S12();
          new S89();
          send("msg18");
          new S68();
        } catch (IllegalStateException e) {
          new S4();
          new S77();
          new S74();
        }
      }
      new State();
    } catch (IllegalStateException e) {
      log("note");
      new S87();
      send("msg10");
    }
  }
  void pause() {
    switch (event) {
      case EV3038:
        new S72();
        if (x5 > 0) {
          switch (event) {
            case EV3039:
              send("msg18");
              new S69();
              break;
            case EV3040:
              new S57();
              send("msg6");
              new S24();
              break;
            case EV3041:
              new S56();
              log("note");
              new S71();
              break;
          }
          new S1();
        } else {
          new S20();
          if (x3 > 0) {
            new S87();
            new S64();
            new S10();
            new S2();
          }
        }
        if (x7 > 0) {
          switch (event) {
            case EV3042:
              new S90();
              break;
            case EV3043:
              send("msg17");
              send("msg3");
              send("msg2");
              break;
          }
          send("msg9");
          if (x0 > 0) {
            new S8();
            send("msg14");
          }
          send("msg19");
        } else {
          log("note");
          new S36();
          try {
            send("msg2");
            new S12();
            new State();
            new S28();
          } finally {
            send("msg8");
            new S77();
            new S61();
          }
        }
        if (x5 > 0) {
          switch (event) {
            case EV3044:
              new S79();
              new S98();
              break;
            case EV3045:
              new S36();
              break;
            case EV3046:
              new S34();
              new S81();
              send("msg17");
              break;
          }
          send("msg3");
          new S49();
        } else {
          new State();
          if (x3 > 0) {
            new S73();
          }
          new S41();
        }
        break;
    }
  }
}
