class S66 extends Abstract7 {
  public void enter() {
    send("msg13");
  }
  void exit() {
    send("msg16");
    new S43();
    new S59();
  }
  void handle() {
    new S30();
    send("msg19");
  }
  void tick() {
    new S70();
    send("msg3");
  }
  void reset() {
    send("msg14");
    switch (event) {
      case EV2009:
        new S19();
        break;
    }
  }
  void open() {
    send("msg12");
    try {
      try {
        new S77();
        new S12();
      } catch (IllegalStateException e) {
        new S85();
        send("msg1");
        new S54();
        send("msg5");
      }
      if (x1 > 0) {
        switch (event) {
          case EV2010:
            new S10();
            new S35();
            send("msg1");
            break;
          case EV2011:
            send("msg19");
            break;
          case EV2012:
            send("msg7");
            new S7();
            break;
        }
        try {
          new S83();
          new S68();
          new S100();
        } catch (IllegalStateException e) {
          send("msg6");
          log("note");
          send("msg7");
          send("msg7");
        }
        new S97();
      } else {
        switch (event) {
          case EV2013:
            new S56();
            send("msg10");
            new S98();
            send("msg18");
            break;
          case EV2014:
            send("msg19");
            send("msg4");
            break;
          case EV2015:
            log("note");
            new S57();
            send("msg14");
            break;
        }
        new Helper();
      }
      log("note");
      send("msg13");
    } catch (IllegalStateException e) {
      switch (event) {
        case EV2016:
          try {
            new S68();
            new S71();
          } catch (IllegalStateException e) {
            new S31();
            new S44();
          } catch (IOException e) {
            new S56();
            send("msg15");
            new S80();
            new S92();
          }
          if (x0 > 0) {
            send("msg3");
          } else {
            new S52();
          }
          new S32();
          new S82();
          break;
        case EV2017:
          if (x5 > 0) {
            new S25();
            new S40();
            new S14();
          }
          send("msg10");
          try {
            send("msg5");
            new S30();
            new S93();
          } catch (IllegalStateException e) {
            new S31();
          } catch (IOException e) {
            send("msg18");
            new S94();
            new S84();
            log("note");
          }
          break;
        case EV2018:
          send("msg12");
          break;
      }
      new S32();
    } finally {
      new S79();
    }
  }
  public void close() {
    log("note");
    new S31();
    if (x3 > 0) {
      new S76();
      log("note");
      send("msg17");
    } else {
      switch (event) {
        case EV2019:
          new S74();
          break;
        case EV2020:
          new S9();
          new S39();
          if (x2 > 0) {
            new S76();
            send("msg7");
            new S97();
          }
          try {
            new S98();
          } catch (IllegalStateException e) {
            send("msg4");
            log("note");
            log("note");
          } catch (IllegalStateException e) {
            send("msg19");
            send("msg5");
            send("msg4");
          }
          break;
        case EV2021:
          switch (event) {
            case EV2022:
              send("msg16");
              break;
          }
          new S11();
          switch (event) {
            case EV2023:
              new S95();
              send("msg13");
              new S66();
              break;
            case EV2024:
              new S90();
              new S37();
              break;
          }
          break;
      }
      new S61();
      new S7();
    }
    try {
      if (x5 > 0) {
        try {
          new S11();
          new S29();
        } finally {
          log("note");
          send("msg10");
          send("msg18");
        }
        if (x1 > 0) {
          send("msg19");
          new S61();
          send("msg12");
          new S29();
        } else {
          log("note");
          new S60();
        }
      }
    } finally {
      send("msg10");
      log("note");
    }
  }
  void start() {
    send("msg14");
    if (x9 > 0) {
      send("msg14");
      if (x4 > 0) {
        new S23();
        switch (event) {
          case EV2025:
            new S91();
            break;
          case EV2026:
            new S82();
            new S3();
            send("msg8");
            break;
        }
      } else {
        new S80();
        if (x8 > 0) {
          send("msg5");
          new S76();
          send("msg6");
        }
      }
      send("msg4");
    } else {
      new S38();
      switch (event) {
        case EV2027:
          new S70();
          break;
      }
      new S84();
    }
    try {
      new S32();
      log("note");
      new S73();
      send("msg19");
    } catch (IOException e) {
      if (x2 > 0) {
        send("msg16");
        switch (event) {
          case EV2028:
            send("msg13");
            break;
        }
        log("note");
      }
      send("msg16");
      new S25();
    } finally {
      new S100();
    }
  }
  void stop() {
    send("msg9");
    new State();
    if (x4 > 0) {
      switch (event) {
        case EV2029:
          try {
            new S50();
            send("msg10");
            send("msg14");
          } finally {
            log("note");
            new S99();
            new S65();
          }
          if (x9 > 0) {
            send("msg11");
            new S76();
          } else {
            send("msg3");
            send("msg16");
          }
          break;
      }
      new S53();
    }
  }
  void pause() {
    new State();
    new S96();
    send("msg2");
  }
}
